#include "spindir/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spindir {

namespace {

void require_sector(HalfInt J, HalfInt mA, HalfInt mB, const char* where) {
    if (mA < HalfInt(0) || mB < HalfInt(0))
        throw std::domain_error(std::string(where) + ": mA, mB must be >= 0 (use the |m| symmetry)");
    require_valid_jm(J, mA, where);
    require_valid_jm(J, mB, where);
}

// Solve (T - shift I) x = b by banded LU with partial pivoting (one
// superdiagonal of fill-in). Near-singular pivots are expected when the
// shift sits on an eigenvalue; they are clamped, which is what makes
// inverse iteration converge in one or two steps.
std::vector<double> solve_shifted(const TridiagonalSym& t, double shift, std::vector<double> rhs) {
    const int n = t.size();
    std::vector<double> d(static_cast<std::size_t>(n));
    std::vector<double> e1(static_cast<std::size_t>(n), 0.0);
    std::vector<double> e2(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = t.diag[static_cast<std::size_t>(i)] - shift;
    for (int i = 0; i + 1 < n; ++i) e1[static_cast<std::size_t>(i)] = t.offdiag[static_cast<std::size_t>(i)];

    constexpr double tiny = 1e-300;
    for (int i = 0; i + 1 < n; ++i) {
        double low = t.offdiag[static_cast<std::size_t>(i)];
        if (std::abs(low) > std::abs(d[static_cast<std::size_t>(i)])) {
            std::swap(d[static_cast<std::size_t>(i)], low);
            std::swap(e1[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(i + 1)]);
            if (i + 2 < n) std::swap(e2[static_cast<std::size_t>(i)], e1[static_cast<std::size_t>(i + 1)]);
            std::swap(rhs[static_cast<std::size_t>(i)], rhs[static_cast<std::size_t>(i + 1)]);
        }
        if (std::abs(d[static_cast<std::size_t>(i)]) < tiny) d[static_cast<std::size_t>(i)] = tiny;
        const double f = low / d[static_cast<std::size_t>(i)];
        d[static_cast<std::size_t>(i + 1)] -= f * e1[static_cast<std::size_t>(i)];
        if (i + 2 < n) e1[static_cast<std::size_t>(i + 1)] -= f * e2[static_cast<std::size_t>(i)];
        rhs[static_cast<std::size_t>(i + 1)] -= f * rhs[static_cast<std::size_t>(i)];
    }
    if (std::abs(d[static_cast<std::size_t>(n - 1)]) < tiny) d[static_cast<std::size_t>(n - 1)] = tiny;

    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        double acc = rhs[static_cast<std::size_t>(i)];
        if (i + 1 < n) acc -= e1[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i + 1)];
        if (i + 2 < n) acc -= e2[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i + 2)];
        x[static_cast<std::size_t>(i)] = acc / d[static_cast<std::size_t>(i)];
    }
    return x;
}

void normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (const double c : v) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : v) c /= norm;
}

long long effective_dimension_of(HalfInt J, HalfInt m) {
    // (J+1)^2 - m^2 = (J+1-m)(J+1+m), both factors integers.
    const long long lo = (J + HalfInt(1) - m).twice() / 2;
    const long long hi = (J + HalfInt(1) + m).twice() / 2;
    return lo * hi;
}

}  // namespace

double mu(HalfInt j, HalfInt mA, HalfInt mB) {
    if (j < abs(mA) || j < abs(mB)) throw std::domain_error("mu: need j >= max(|mA|, |mB|)");
    if (j.twice() == 0) return 0.0;
    const double tj = j.twice();
    return static_cast<double>(mA.twice()) * mB.twice() / (tj * (tj + 2.0));
}

double nu_abs(HalfInt j, HalfInt mA, HalfInt mB) {
    if (j < HalfInt::half()) throw std::domain_error("nu_abs: need j >= 1/2");
    const double tj = j.twice();
    const double ra = tj * tj - static_cast<double>(mA.twice()) * mA.twice();
    const double rb = tj * tj - static_cast<double>(mB.twice()) * mB.twice();
    if (ra < 0.0 || rb < 0.0) throw std::domain_error("nu_abs: negative radicand (|m| > j)");
    return std::sqrt(ra * rb / (tj * tj - 1.0)) / (2.0 * tj);
}

TridiagonalSym build_matrix(HalfInt J, HalfInt mA, HalfInt mB) {
    require_sector(J, mA, mB, "build_matrix");
    const HalfInt m = std::max(mA, mB);
    const int l = (J + HalfInt(1) - m).twice() / 2;
    TridiagonalSym out;
    out.diag.resize(static_cast<std::size_t>(l));
    out.offdiag.resize(static_cast<std::size_t>(l > 0 ? l - 1 : 0));
    for (int k = 1; k <= l; ++k)
        out.diag[static_cast<std::size_t>(k - 1)] = mu(m + HalfInt(k - 1), mA, mB);
    for (int k = 1; k < l; ++k)
        out.offdiag[static_cast<std::size_t>(k - 1)] = nu_abs(m + HalfInt(k), mA, mB);
    return out;
}

std::vector<double> char_poly_Q(const TridiagonalSym& m, double x) {
    const int l = m.size();
    std::vector<double> q(static_cast<std::size_t>(l + 1));
    q[0] = 1.0;
    double prev = 0.0;  // Q_{-1}
    for (int k = 0; k < l; ++k) {
        const double c2 = k > 0 ? m.offdiag[static_cast<std::size_t>(k - 1)] * m.offdiag[static_cast<std::size_t>(k - 1)] : 0.0;
        const double next = (m.diag[static_cast<std::size_t>(k)] - x) * q[static_cast<std::size_t>(k)] - c2 * prev;
        prev = q[static_cast<std::size_t>(k)];
        q[static_cast<std::size_t>(k + 1)] = next;
    }
    return q;
}

int eigenvalues_below(const TridiagonalSym& m, double x) {
    const auto q = char_poly_Q(m, x);
    int changes = 0;
    int prev_sign = 1;  // Q_0 = 1
    for (std::size_t k = 1; k < q.size(); ++k) {
        const int sign = q[k] > 0.0 ? 1 : (q[k] < 0.0 ? -1 : -prev_sign);
        if (sign != prev_sign) ++changes;
        prev_sign = sign;
    }
    return changes;
}

Eigenpair max_eigenpair(const TridiagonalSym& m) {
    const int l = m.size();
    if (l < 1) throw std::domain_error("max_eigenpair: empty matrix");
    if (l == 1) return {m.diag[0], {1.0}};

    double lo = m.diag[0], hi = m.diag[0];
    for (int i = 0; i < l; ++i) {
        const double left = i > 0 ? std::abs(m.offdiag[static_cast<std::size_t>(i - 1)]) : 0.0;
        const double right = i + 1 < l ? std::abs(m.offdiag[static_cast<std::size_t>(i)]) : 0.0;
        lo = std::min(lo, m.diag[static_cast<std::size_t>(i)] - left - right);
        hi = std::max(hi, m.diag[static_cast<std::size_t>(i)] + left + right);
    }
    hi += 1e-12;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (eigenvalues_below(m, mid) >= l ? hi : lo) = mid;
    }
    const double value = 0.5 * (lo + hi);

    // Perron vector of an irreducible non-negative-offdiagonal tridiagonal is
    // strictly positive, so the all-ones start is never orthogonal to it.
    std::vector<double> v(static_cast<std::size_t>(l), 1.0 / std::sqrt(static_cast<double>(l)));
    for (int step = 0; step < 2; ++step) {
        v = solve_shifted(m, value, std::move(v));
        normalize(v);
    }
    double total = 0.0;
    for (const double c : v) total += c;
    if (total < 0.0)
        for (double& c : v) c = -c;
    return {value, std::move(v)};
}

double CoupledState::component(HalfInt j) const {
    if (!same_parity(j, J) || j < min_j() || j > J)
        throw std::domain_error("CoupledState::component: block out of range");
    return components[static_cast<std::size_t>((j - min_j()).twice() / 2)];
}

void CoupledState::validate() const {
    require_valid_jm(J, mA, "CoupledState");
    const int expected = (J - min_j()).twice() / 2 + 1;
    if (static_cast<int>(components.size()) != expected)
        throw std::domain_error("CoupledState: wrong number of components");
    double norm = 0.0;
    for (const double c : components) {
        if (c < 0.0) throw std::domain_error("CoupledState: components must be non-negative");
        norm += c * c;
    }
    if (std::abs(norm - 1.0) > 1e-12) throw std::domain_error("CoupledState: not normalized");
}

FidelityResult optimal_fidelity(HalfInt J, HalfInt mA, HalfInt mB) {
    require_sector(J, mA, mB, "optimal_fidelity");
    const HalfInt m = std::max(mA, mB);
    const auto matrix = build_matrix(J, mA, mB);
    auto [value, vec] = max_eigenpair(matrix);

    CoupledState state;
    state.J = J;
    state.mA = mA;
    state.components.assign(static_cast<std::size_t>((J - mA).twice() / 2 + 1), 0.0);
    const int offset = (m - mA).twice() / 2;
    for (std::size_t i = 0; i < vec.size(); ++i) state.components[i + static_cast<std::size_t>(offset)] = vec[i];

    return {0.5 * (1.0 + value), value, std::move(state), effective_dimension_of(J, m)};
}

FidelityResult optimal_fidelity(int n_spins) {
    if (n_spins < 1) throw std::domain_error("optimal_fidelity: need at least one spin");
    const HalfInt J = HalfInt::from_twice(n_spins);
    const HalfInt m = J.is_integer() ? HalfInt(0) : HalfInt::half();
    return optimal_fidelity(J, m, m);
}

double general_fidelity(const CoupledState& state, HalfInt mB) {
    state.validate();
    if (mB < HalfInt(0) || mB > state.J) throw std::domain_error("general_fidelity: need 0 <= mB <= J");
    require_valid_jm(state.J, mB, "general_fidelity");
    const HalfInt mA = state.mA;
    if (mA < HalfInt(0)) throw std::domain_error("general_fidelity: mA must be >= 0");
    const HalfInt m = std::max(mA, mB);

    double f = 0.5;
    for (HalfInt j = m; j <= state.J; j = j + HalfInt(1)) {
        const double aj = state.component(j);
        f += 0.5 * mu(j, mA, mB) * aj * aj;
        if (j > m) f += state.component(j - HalfInt(1)) * aj * nu_abs(j, mA, mB);
    }
    for (HalfInt j = mA; j < m; j = j + HalfInt(1)) {
        const double aj = state.component(j);
        f -= 0.5 * aj * aj;
    }
    return f;
}

}  // namespace spindir
