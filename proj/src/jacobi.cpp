#include "spindir/jacobi.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "spindir/clebsch.hpp"

namespace spindir {

namespace {

void check_params(const JacobiParams& p, const char* where) {
    if (p.n < 0 || p.a < 0 || p.b < 0)
        throw std::domain_error(std::string(where) + ": n, a, b must be non-negative");
}

// Bisection for the single zero of P_degree^{a,b} inside (lo, 1); the caller
// guarantees P(lo) < 0 < P(1).
double bisect_top_zero(int degree, int a, int b, double lo, int* iterations_out) {
    double hi = 1.0;
    int iters = 0;
    for (; iters < 200; ++iters) {
        const double mid = 0.5 * (lo + hi);
        const double f = jacobi_eval(degree, a, b, mid);
        if (f == 0.0) {
            lo = hi = mid;
            break;
        }
        (f < 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-14) break;
    }
    if (iters >= 200)
        throw std::runtime_error("largest_zero: bisection did not converge");
    if (iterations_out) *iterations_out = iters;
    return 0.5 * (lo + hi);
}

// Largest zeros of all degrees 1..n for fixed (a, b).
std::vector<double> zero_chain(int n, int a, int b, int* last_iterations) {
    std::vector<double> zeros(static_cast<std::size_t>(n));
    zeros[0] = static_cast<double>(b - a) / (a + b + 2);
    if (last_iterations) *last_iterations = 0;
    for (int k = 2; k <= n; ++k)
        zeros[static_cast<std::size_t>(k - 1)] =
            bisect_top_zero(k, a, b, zeros[static_cast<std::size_t>(k - 2)],
                            k == n ? last_iterations : nullptr);
    return zeros;
}

}  // namespace

double jacobi_eval(const JacobiParams& p, double x) {
    check_params(p, "jacobi_eval");
    if (p.n == 0) return 1.0;
    const double a = p.a, b = p.b;
    double prev = 1.0;
    double cur = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
    for (int k = 1; k < p.n; ++k) {
        const double apb2k = a + b + 2.0 * k;
        const double alpha = 2.0 * (k + 1.0) * (k + a + b + 1.0) / ((apb2k + 1.0) * (apb2k + 2.0));
        const double beta = (b * b - a * a) / (apb2k * (apb2k + 2.0));
        const double gamma = 2.0 * (k + a) * (k + b) / (apb2k * (apb2k + 1.0));
        const double next = ((x - beta) * cur - gamma * prev) / alpha;
        prev = cur;
        cur = next;
    }
    return cur;
}

double jacobi_leading_coefficient(const JacobiParams& p) {
    check_params(p, "jacobi_leading_coefficient");
    const int n = p.n, apb = p.a + p.b;
    return std::exp(log_factorial(2 * n + apb) - n * std::log(2.0) - log_factorial(n) -
                    log_factorial(n + apb));
}

ZeroReport largest_zero(const JacobiParams& p) {
    check_params(p, "largest_zero");
    if (p.n < 1) throw std::domain_error("largest_zero: degree must be >= 1");
    int iters = 0;
    const auto zeros = zero_chain(p.n, p.a, p.b, &iters);
    const double z = zeros.back();
    return {p, z, iters, std::abs(jacobi_eval(p, z))};
}

double verify_differentiation(const JacobiParams& p, std::span<const double> grid) {
    check_params(p, "verify_differentiation");
    if (p.n < 1) throw std::domain_error("verify_differentiation: degree must be >= 1");
    const double h = 1e-5;
    const double factor = 0.5 * (p.n + p.a + p.b + 1);
    double worst = 0.0;
    for (const double x : grid) {
        const double numeric = (jacobi_eval(p.n, p.a, p.b, x + h) - jacobi_eval(p.n, p.a, p.b, x - h)) / (2.0 * h);
        const double exact = factor * jacobi_eval(p.n - 1, p.a + 1, p.b + 1, x);
        worst = std::max(worst, std::abs(numeric - exact));
    }
    return worst;
}

double verify_b_relations(const JacobiParams& p, std::span<const double> grid) {
    check_params(p, "verify_b_relations");
    if (p.b < 1) throw std::domain_error("verify_b_relations: b must be >= 1");
    const int n = p.n, a = p.a, b = p.b;
    double worst = 0.0;
    for (const double x : grid) {
        const double r1 = (2.0 * n + a + b) * jacobi_eval(n, a, b - 1, x) -
                          (n + a + b) * jacobi_eval(n, a, b, x) -
                          (n + a) * (n >= 1 ? jacobi_eval(n - 1, a, b, x) : 0.0);
        const double r2 = (n + a + b + 1) * 0.5 * (1.0 + x) * jacobi_eval(n, a, b + 1, x) -
                          (n + 1.0) * jacobi_eval(n + 1, a, b - 1, x) - b * jacobi_eval(n, a, b, x);
        worst = std::max({worst, std::abs(r1), std::abs(r2)});
    }
    return worst;
}

ZeroInequalityReport check_zero_inequalities(int n_max, int b_max) {
    if (n_max < 2) throw std::domain_error("check_zero_inequalities: n_max must be >= 2");

    std::map<std::pair<int, int>, std::vector<double>> chains;
    const auto zero = [&](int n, int a, int b) -> double {
        auto& chain = chains[{a, b}];
        if (static_cast<int>(chain.size()) < n) chain = zero_chain(n_max + 1, a, b, nullptr);
        return chain[static_cast<std::size_t>(n - 1)];
    };

    ZeroInequalityReport report;
    report.min_margin = 2.0;
    const double slack = -1e-12;
    const auto record = [&](int n, int a, int b, int which, double margin) {
        ++report.checked;
        report.min_margin = std::min(report.min_margin, margin);
        if (margin < slack) report.violations.push_back({n, a, b, which, margin});
    };

    for (int b = 0; b <= b_max; ++b) {
        for (int a = 0; a <= b; ++a) {
            for (int n = 2; n <= n_max; ++n) {
                record(n, a, b, 1, zero(n, a, b) - zero(n - 1, a + 1, b + 1));
                if (b >= 1) {
                    record(n, a, b, 2, std::min(zero(n, a, b - 1) - zero(n - 1, a, b),
                                                zero(n, a, b) - zero(n, a, b - 1)));
                    record(n, a, b, 3, zero(n + 1, a, b - 1) - zero(n, a, b + 1));
                }
            }
        }
    }
    return report;
}

ClmMax max_over_clm(HalfInt l, HalfInt m) {
    if (m < HalfInt(0) || m > l) throw std::domain_error("max_over_clm: need 0 <= m <= l");
    if (!same_parity(l, m))
        throw std::domain_error("max_over_clm: l - m must be an integer");

    bool found = false;
    ClmMax best;
    for (int tmp = m.twice(); tmp <= l.twice(); tmp += 2) {
        for (int tmpp = tmp; tmpp <= l.twice(); tmpp += 2) {
            const int degree = (l.twice() - tmpp) / 2;
            if (degree == 0) continue;  // degree-0 polynomials have no zeros
            const int a = (tmpp - tmp) / 2;
            const int b = (tmpp + tmp) / 2;
            const double z = largest_zero_value(degree, a, b);
            if (!found || z > best.value) {
                best = {HalfInt::from_twice(tmp), HalfInt::from_twice(tmpp), z};
                found = true;
            }
        }
    }
    if (!found) throw std::invalid_argument("max_over_clm: candidate set is empty");
    return best;
}

double asymptotic_zero(int n, int b) {
    if (n < 1) throw std::domain_error("asymptotic_zero: n must be >= 1");
    if (b < 0) throw std::domain_error("asymptotic_zero: b must be >= 0");
    const double xi2 = kBesselJ0FirstZero * kBesselJ0FirstZero;
    return 1.0 - xi2 / (2.0 * n * n) * (1.0 - (b + 1.0) / n);
}

}  // namespace spindir
