#pragma once

#include <complex>
#include <vector>

#include "spindir/direction.hpp"
#include "spindir/half_int.hpp"

namespace spindir {

// Rotation matrix block for one irreducible spin-j representation.
// Entries are indexed by (m', m) with both running from j down to -j.
struct WignerBlock {
    HalfInt j;
    std::vector<std::complex<double>> entries;  // row-major, (2j+1) x (2j+1)

    int dim() const { return num_states(j); }
    int row_of(HalfInt m) const { return (j - m).twice() / 2; }

    std::complex<double>& at(int row, int col) { return entries[static_cast<std::size_t>(row * dim() + col)]; }
    const std::complex<double>& at(int row, int col) const {
        return entries[static_cast<std::size_t>(row * dim() + col)];
    }
    const std::complex<double>& at_m(HalfInt mp, HalfInt m) const { return at(row_of(mp), row_of(m)); }
};

// Reduced rotation matrix d^j(beta) = exp(-i beta Jy), real orthogonal,
// from Wigner's factorial sum. Factorials are table doubles for 2j <= 60 and
// log-gamma beyond.
WignerBlock wigner_small_d(HalfInt j, double beta);

// Full rotation D^j_{m'm}(n) = exp(-i m' phi) d^j_{m'm}(theta); this is the
// rotation carrying z to n with vanishing third Euler angle.
WignerBlock wigner_D(HalfInt j, const Direction& n);

// Single column m of d^j(beta) / D^j(n), entries ordered m' = j .. -j.
// Cheaper than a full block in sampling loops.
std::vector<double> wigner_d_column(HalfInt j, HalfInt m, double beta);
std::vector<std::complex<double>> wigner_D_column(HalfInt j, HalfInt m, const Direction& n);

// max |U^dagger U - 1| over the block, used by tests.
double unitarity_defect(const WignerBlock& u);

}  // namespace spindir
