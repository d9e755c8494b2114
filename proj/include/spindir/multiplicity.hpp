#pragma once

#include <string_view>
#include <vector>

#include "spindir/fidelity.hpp"
#include "spindir/half_int.hpp"

namespace spindir {

// State of N spins at fixed mA with the repeated spin-j blocks kept
// separate: blocks[i][alpha] is the amplitude on the alpha-th occurrence of
// j = |mA| + i in the sequential left-to-right coupling basis.
struct MultiplicityState {
    HalfInt J;
    HalfInt mA;
    std::vector<std::vector<double>> blocks;

    HalfInt min_j() const { return abs(mA); }
    HalfInt block_j(int i) const { return min_j() + HalfInt(i); }
    void validate() const;
};

// Number of occurrences of spin j in the N-fold product of spin-1/2.
int multiplicity_count(int n_spins, HalfInt j);

// Root-sum-square reduction over the occurrences: the resulting single-block
// components carry everything the fidelity depends on, and the fidelity of
// the output upper-bounds that of the input for any orthonormal choice of
// decoding vectors in the multiplicity space (Schwarz).
CoupledState effective_components(const MultiplicityState& state);

// Coupled-basis amplitudes of a product state given as a pattern of 'u'/'d'
// characters, built by coupling the spins left to right; the occurrence
// index enumerates intermediate-spin paths in a fixed order. N <= 12.
MultiplicityState decompose_product(std::string_view pattern);

}  // namespace spindir
