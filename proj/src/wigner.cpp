#include "spindir/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "spindir/clebsch.hpp"

namespace spindir {

namespace {

double ipow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

const double* factorial_table() {
    static const std::array<double, 171> table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    return table.data();
}

// One entry of d^j; tmp/tm are twice m' and m. ch, sh are cos/sin of beta/2.
double d_entry(int tj, int tmp, int tm, double ch, double sh) {
    const double* fact = factorial_table();
    const int jpp = (tj + tmp) / 2, jmp = (tj - tmp) / 2;
    const int jpm = (tj + tm) / 2, jmm = (tj - tm) / 2;
    const int dm = (tmp - tm) / 2;  // m' - m
    const int smin = std::max(0, -dm);
    const int smax = std::min(jpm, jmp);
    if (smin > smax) return 0.0;

    const bool use_log = tj > 60;
    double pref = 0.0;
    if (use_log)
        pref = 0.5 * (log_factorial(jpp) + log_factorial(jmp) + log_factorial(jpm) + log_factorial(jmm));
    else
        pref = std::sqrt(fact[jpp] * fact[jmp] * fact[jpm] * fact[jmm]);

    double total = 0.0;
    for (int s = smin; s <= smax; ++s) {
        const int pc = jpm + jmp - 2 * s;
        const int ps = dm + 2 * s;
        const double trig = ipow(ch, pc) * ipow(sh, ps);
        double term;
        if (use_log) {
            term = std::exp(pref - log_factorial(jpm - s) - log_factorial(s) - log_factorial(dm + s) -
                            log_factorial(jmp - s)) *
                   trig;
        } else {
            term = pref / (fact[jpm - s] * fact[s] * fact[dm + s] * fact[jmp - s]) * trig;
        }
        total += ((dm + s) & 1) ? -term : term;
    }
    return total;
}

}  // namespace

WignerBlock wigner_small_d(HalfInt j, double beta) {
    if (j.twice() < 0) throw std::domain_error("wigner_small_d: negative spin");
    const int tj = j.twice();
    const int n = tj + 1;
    WignerBlock block{j, std::vector<std::complex<double>>(static_cast<std::size_t>(n) * n)};
    const double ch = std::cos(0.5 * beta);
    const double sh = std::sin(0.5 * beta);
    for (int r = 0; r < n; ++r) {
        const int tmp = tj - 2 * r;
        for (int c = 0; c < n; ++c) {
            const int tm = tj - 2 * c;
            block.at(r, c) = d_entry(tj, tmp, tm, ch, sh);
        }
    }
    return block;
}

WignerBlock wigner_D(HalfInt j, const Direction& n) {
    WignerBlock block = wigner_small_d(j, n.theta);
    const int dim = block.dim();
    for (int r = 0; r < dim; ++r) {
        const double mp = 0.5 * (j.twice() - 2 * r);
        const std::complex<double> phase = std::polar(1.0, -mp * n.phi);
        for (int c = 0; c < dim; ++c) block.at(r, c) *= phase;
    }
    return block;
}

std::vector<double> wigner_d_column(HalfInt j, HalfInt m, double beta) {
    require_valid_jm(j, m, "wigner_d_column");
    const int tj = j.twice();
    const double ch = std::cos(0.5 * beta);
    const double sh = std::sin(0.5 * beta);
    std::vector<double> col(static_cast<std::size_t>(tj + 1));
    for (int r = 0; r <= tj; ++r) col[static_cast<std::size_t>(r)] = d_entry(tj, tj - 2 * r, m.twice(), ch, sh);
    return col;
}

std::vector<std::complex<double>> wigner_D_column(HalfInt j, HalfInt m, const Direction& n) {
    const std::vector<double> d = wigner_d_column(j, m, n.theta);
    std::vector<std::complex<double>> col(d.size());
    const int tj = j.twice();
    for (std::size_t r = 0; r < d.size(); ++r) {
        const double mp = 0.5 * (tj - 2 * static_cast<int>(r));
        col[r] = std::polar(d[r], -mp * n.phi);
    }
    return col;
}

double unitarity_defect(const WignerBlock& u) {
    const int n = u.dim();
    double worst = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            std::complex<double> acc = 0.0;
            for (int k = 0; k < n; ++k) acc += std::conj(u.at(k, r)) * u.at(k, c);
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

}  // namespace spindir
