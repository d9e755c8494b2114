#include "spindir/multiplicity.hpp"

#include <cmath>
#include <stdexcept>

#include "spindir/clebsch.hpp"

namespace spindir {

void MultiplicityState::validate() const {
    require_valid_jm(J, mA, "MultiplicityState");
    const int expected = (J - min_j()).twice() / 2 + 1;
    if (static_cast<int>(blocks.size()) != expected)
        throw std::domain_error("MultiplicityState: wrong number of blocks");
    double norm = 0.0;
    for (const auto& block : blocks)
        for (const double a : block) norm += a * a;
    if (std::abs(norm - 1.0) > 1e-12) throw std::domain_error("MultiplicityState: not normalized");
}

int multiplicity_count(int n_spins, HalfInt j) {
    if (n_spins < 1) throw std::domain_error("multiplicity_count: need n_spins >= 1");
    if (!same_parity(j, HalfInt::from_twice(n_spins)) || j < HalfInt(0) ||
        j.twice() > n_spins)
        return 0;
    // Paths in the coupling walk: Catalan-triangle count C(N,k) - C(N,k-1).
    const int k = (n_spins - j.twice()) / 2;
    const auto binom = [](int n, int r) -> double {
        if (r < 0 || r > n) return 0.0;
        return std::exp(log_factorial(n) - log_factorial(r) - log_factorial(n - r));
    };
    return static_cast<int>(std::llround(binom(n_spins, k) - binom(n_spins, k - 1)));
}

CoupledState effective_components(const MultiplicityState& state) {
    state.validate();
    CoupledState out;
    out.J = state.J;
    out.mA = abs(state.mA);  // the reduction is invariant under a global spin flip
    out.components.reserve(state.blocks.size());
    for (const auto& block : state.blocks) {
        double sum = 0.0;
        for (const double a : block) sum += a * a;
        out.components.push_back(std::sqrt(sum));
    }
    return out;
}

MultiplicityState decompose_product(std::string_view pattern) {
    const int n = static_cast<int>(pattern.size());
    if (n < 1 || n > 12)
        throw std::invalid_argument("decompose_product: pattern length must be in [1, 12]");
    std::vector<int> spins;  // twice m of each particle
    spins.reserve(static_cast<std::size_t>(n));
    for (const char c : pattern) {
        if (c == 'u' || c == 'U')
            spins.push_back(1);
        else if (c == 'd' || c == 'D')
            spins.push_back(-1);
        else
            throw std::invalid_argument("decompose_product: pattern must consist of 'u'/'d'");
    }

    int t_m = 0;
    for (const int s : spins) t_m += s;
    const HalfInt mA = HalfInt::from_twice(t_m);
    const HalfInt J = HalfInt::from_twice(n);

    MultiplicityState out;
    out.J = J;
    out.mA = mA;
    out.blocks.resize(static_cast<std::size_t>((J - abs(mA)).twice() / 2 + 1));

    // Depth-first walk over intermediate total spins; the amplitude of a path
    // is the product of the coupling coefficients along it, with all
    // intermediate m fixed by the pattern's partial sums.
    const auto descend = [&](auto&& self, int step, int tj, double amp) -> void {
        if (step == n) {
            const int idx = (tj - abs(mA).twice()) / 2;
            if (idx >= 0) out.blocks[static_cast<std::size_t>(idx)].push_back(amp);
            return;
        }
        int t_partial = 0;
        for (int i = 0; i <= step; ++i) t_partial += spins[static_cast<std::size_t>(i)];
        const int ts = spins[static_cast<std::size_t>(step)];
        // j + 1/2 branch first, then j - 1/2: fixes the occurrence order.
        for (const int tj_next : {tj + 1, tj - 1}) {
            if (tj_next < 0) continue;
            double factor = 0.0;
            if (std::abs(t_partial) <= tj_next && std::abs(t_partial - ts) <= tj) {
                factor = cg_coefficient(HalfInt::from_twice(tj), HalfInt::from_twice(t_partial - ts),
                                        HalfInt::half(), HalfInt::from_twice(ts),
                                        HalfInt::from_twice(tj_next), HalfInt::from_twice(t_partial));
            }
            self(self, step + 1, tj_next, amp * factor);
        }
    };
    descend(descend, 1, 1, 1.0);
    return out;
}

}  // namespace spindir
