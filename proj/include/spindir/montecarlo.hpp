#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"
#include "spindir/fidelity.hpp"
#include "spindir/povm.hpp"

namespace spindir {

// Outcome distribution p_r = c_r |<B| U^dag(n_r) U(n) |A>|^2 of a discrete
// measurement on the encoded direction n. Checks completeness (residual
// < 1e-8) before evaluating.
std::vector<double> outcome_probabilities(const CoupledState& state, const Direction& n,
                                          const PovmSpec& povm);

struct SimReport {
    long long trials = 0;
    std::uint64_t seed = 0;
    double mean_fidelity = 0.0;
    double std_error = 0.0;
    std::optional<double> analytic_target;
    int workers = 1;

    std::optional<double> sigma_distance() const;
};

// End-to-end sampling: draw an isotropic direction, draw an outcome from the
// measurement distribution, score the guess (1 + n.n_r)/2, accumulate with
// Welford running moments. Deterministic for fixed (seed, workers); worker w
// uses the stream seeded with seed + w, and the merged mean is exactly the
// trial-weighted mean of the per-worker means.
SimReport simulate(const CoupledState& state, const PovmSpec& povm, long long trials,
                   std::uint64_t seed, int workers = 1, std::optional<double> analytic_target = {});

nlohmann::json to_json(const SimReport& report);

}  // namespace spindir
