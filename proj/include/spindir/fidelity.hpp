#pragma once

#include <vector>

#include "spindir/half_int.hpp"

namespace spindir {

// Diagonal coupling coefficient mu_j = mA*mB / (j(j+1)); zero at j = 0 (the
// singlet block is rotationally invariant and only contributes the constant
// 1/2 to the fidelity).
double mu(HalfInt j, HalfInt mA, HalfInt mB);

// |nu_j| = (1/j) sqrt((j^2 - mA^2)(j^2 - mB^2) / (4j^2 - 1)); the free phase
// is fixed to zero throughout (canonical real non-negative amplitudes).
double nu_abs(HalfInt j, HalfInt mA, HalfInt mB);

// Real symmetric tridiagonal fidelity matrix. diag[k-1] = d_k = mu_{k+m-1},
// offdiag[k-1] = c_k = |nu_{k+m}|; index k = 1 corresponds to the block
// j = m, k = l to j = J (the paper's ordering puts d_l in the top-left, which
// is a symmetric permutation and leaves the spectrum unchanged).
struct TridiagonalSym {
    std::vector<double> diag;
    std::vector<double> offdiag;
    int size() const { return static_cast<int>(diag.size()); }
};

TridiagonalSym build_matrix(HalfInt J, HalfInt mA, HalfInt mB);

// Characteristic-polynomial sequence Q_0..Q_l at x from
// Q_{k+1} = (d_{k+1} - x) Q_k - c_k^2 Q_{k-1}, Q_{-1} = 0, Q_0 = 1.
std::vector<double> char_poly_Q(const TridiagonalSym& m, double x);

// Sturm count: number of eigenvalues strictly below x.
int eigenvalues_below(const TridiagonalSym& m, double x);

struct Eigenpair {
    double value = 0.0;
    std::vector<double> vector;  // normalized, all entries >= 0 (Perron)
};

// Largest eigenvalue by Sturm bisection on the Q sequence (to 1e-13),
// eigenvector by two inverse-iteration steps from the bisection estimate.
Eigenpair max_eigenpair(const TridiagonalSym& m);

// Signal state in the coupled basis at fixed mA: real non-negative
// components A_j for j = |mA|, |mA|+1, ..., J.
struct CoupledState {
    HalfInt J;
    HalfInt mA;
    std::vector<double> components;

    HalfInt min_j() const { return abs(mA); }
    int block_count() const { return static_cast<int>(components.size()); }
    double component(HalfInt j) const;
    void validate() const;  // throws unless unit-norm with admissible shape
};

struct FidelityResult {
    double fidelity = 0.0;
    double top_eigenvalue = 0.0;
    CoupledState optimal_state;
    long long effective_dimension = 0;  // (J+1)^2 - m^2 with m = max(mA, mB)
};

// Maximal fidelity for given J and sector (mA, mB): F = (1 + x_l)/2 with x_l
// the top eigenvalue of the tridiagonal matrix; the optimal state has
// support only on j >= max(mA, mB).
FidelityResult optimal_fidelity(HalfInt J, HalfInt mA, HalfInt mB);

// Optimal encoding of n_spins spin-1/2 particles: J = N/2 and
// mA = mB = 0 (N even) or 1/2 (N odd).
FidelityResult optimal_fidelity(int n_spins);

// Fidelity of an arbitrary canonical-phase state measured with the
// standard reference decoding at mB.
double general_fidelity(const CoupledState& state, HalfInt mB);

}  // namespace spindir
