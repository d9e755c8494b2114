#pragma once

#include <span>
#include <vector>

#include "spindir/half_int.hpp"

namespace spindir {

struct JacobiParams {
    int n = 0;  // degree
    int a = 0;
    int b = 0;
};

struct ZeroReport {
    JacobiParams params;
    double largest_zero = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

// P_n^{a,b}(x) by the upward three-term recursion, normalized so the leading
// coefficient is Gamma(2n+a+b+1) / (2^n n! Gamma(n+a+b+1)).
double jacobi_eval(const JacobiParams& p, double x);
inline double jacobi_eval(int n, int a, int b, double x) { return jacobi_eval({n, a, b}, x); }

// Leading coefficient A_n of the normalization above.
double jacobi_leading_coefficient(const JacobiParams& p);

// Largest zero by bisection on [x_{n-1}^{a,b}, 1]; interlacing makes the
// bracket valid at every degree of the chain, so convergence is guaranteed.
ZeroReport largest_zero(const JacobiParams& p);
inline double largest_zero_value(int n, int a, int b) { return largest_zero({n, a, b}).largest_zero; }

// Max deviation over the grid between a central finite difference of
// P_n^{a,b} (step 1e-5) and the closed-form derivative
// (n+a+b+1)/2 * P_{n-1}^{a+1,b+1}.
double verify_differentiation(const JacobiParams& p, std::span<const double> grid);

// Max residual over the grid of the two parameter-shift identities
//   (2n+a+b) P_n^{a,b-1} = (n+a+b) P_n^{a,b} + (n+a) P_{n-1}^{a,b}
//   (n+a+b+1)(1+x)/2 P_n^{a,b+1} = (n+1) P_{n+1}^{a,b-1} + b P_n^{a,b}
double verify_b_relations(const JacobiParams& p, std::span<const double> grid);

struct ZeroInequalityViolation {
    int n, a, b;
    int which;  // 1, 2 or 3, in the order listed below
    double margin;
};

struct ZeroInequalityReport {
    long long checked = 0;
    double min_margin = 0.0;
    std::vector<ZeroInequalityViolation> violations;
};

// Sweeps every admissible (n <= n_max, 0 <= a <= b <= b_max) through
//   (1) x_{n-1}^{a+1,b+1} < x_n^{a,b}
//   (2) x_{n-1}^{a,b} < x_n^{a,b-1} < x_n^{a,b}
//   (3) x_n^{a,b+1}   < x_{n+1}^{a,b-1}
// and reports any violation beyond a 1e-12 slack.
ZeroInequalityReport check_zero_inequalities(int n_max, int b_max);

struct ClmMax {
    HalfInt m_prime;
    HalfInt m_double_prime;
    double value = 0.0;
};

// Brute-force maximum of { x_{l-m''}^{m''-m', m''+m'} : m <= m' <= m'' <= l },
// skipping degree-0 entries (they have no zeros). Throws if the set is empty.
// l may be half-integer as long as l - m is a non-negative integer.
ClmMax max_over_clm(HalfInt l, HalfInt m);

// Second-order large-degree estimate of the largest zero of P_n^{0,b}:
// 1 - xi0^2/(2 n^2) * (1 - (b+1)/n), xi0 the first zero of the Bessel J0.
double asymptotic_zero(int n, int b);

inline constexpr double kBesselJ0FirstZero = 2.404825557695773;

}  // namespace spindir
