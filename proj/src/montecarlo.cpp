#include "spindir/montecarlo.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "spindir/report.hpp"
#include "spindir/sampling.hpp"
#include "spindir/wigner.hpp"

namespace spindir {

namespace {

struct PreparedPovm {
    struct Outcome {
        double weight;
        std::array<double, 3> guess;
        // <B| U^dag(n_r), one row per signal block, entries over m'.
        std::vector<std::vector<std::complex<double>>> rows;
    };
    HalfInt m_low;
    HalfInt J;
    HalfInt mA;
    std::vector<double> amplitudes;  // A_j for j = m_low..J
    std::vector<Outcome> outcomes;

    std::size_t block_count() const { return amplitudes.size(); }
};

PreparedPovm prepare(const CoupledState& state, const PovmSpec& povm) {
    PreparedPovm prep;
    prep.J = state.J;
    prep.mA = state.mA;
    prep.m_low = std::max(state.min_j(), povm.reference.mB);
    for (HalfInt j = prep.m_low; j <= state.J; j = j + HalfInt(1))
        prep.amplitudes.push_back(state.component(j));
    for (const auto& outcome : povm.outcomes) {
        PreparedPovm::Outcome prepared;
        prepared.weight = outcome.weight;
        prepared.guess = outcome.direction.cartesian();
        for (HalfInt j = prep.m_low; j <= state.J; j = j + HalfInt(1)) {
            auto column = wigner_D_column(j, povm.reference.mB, outcome.direction);
            const double bj = povm.reference.component(j);
            for (auto& entry : column) entry = bj * std::conj(entry);
            prepared.rows.push_back(std::move(column));
        }
        prep.outcomes.push_back(std::move(prepared));
    }
    return prep;
}

void probabilities_at(const PreparedPovm& prep, const Direction& n, std::vector<double>& out) {
    // D^j(n) columns at m = mA, scaled by the signal amplitudes.
    std::vector<std::vector<std::complex<double>>> columns;
    columns.reserve(prep.block_count());
    std::size_t blk = 0;
    for (HalfInt j = prep.m_low; j <= prep.J; j = j + HalfInt(1), ++blk) {
        auto column = wigner_D_column(j, prep.mA, n);
        for (auto& entry : column) entry *= prep.amplitudes[blk];
        columns.push_back(std::move(column));
    }
    out.resize(prep.outcomes.size());
    for (std::size_t r = 0; r < prep.outcomes.size(); ++r) {
        std::complex<double> overlap = 0.0;
        for (std::size_t b = 0; b < columns.size(); ++b) {
            const auto& row = prep.outcomes[r].rows[b];
            const auto& col = columns[b];
            for (std::size_t i = 0; i < col.size(); ++i) overlap += row[i] * col[i];
        }
        out[r] = prep.outcomes[r].weight * std::norm(overlap);
    }
}

struct RunningStats {
    long long count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    static RunningStats merge(const RunningStats& a, const RunningStats& b) {
        if (a.count == 0) return b;
        if (b.count == 0) return a;
        RunningStats out;
        out.count = a.count + b.count;
        out.mean = (static_cast<double>(a.count) * a.mean + static_cast<double>(b.count) * b.mean) /
                   static_cast<double>(out.count);
        const double delta = b.mean - a.mean;
        out.m2 = a.m2 + b.m2 +
                 delta * delta * static_cast<double>(a.count) * static_cast<double>(b.count) /
                     static_cast<double>(out.count);
        return out;
    }

    double std_error() const {
        if (count < 2) return 0.0;
        return std::sqrt(m2 / static_cast<double>(count - 1)) / std::sqrt(static_cast<double>(count));
    }
};

RunningStats run_worker(const PreparedPovm& prep, long long trials, std::uint64_t seed) {
    Rng rng(seed);
    RunningStats stats;
    std::vector<double> probs;
    for (long long t = 0; t < trials; ++t) {
        const Direction n = haar_sample(rng);
        probabilities_at(prep, n, probs);
        const double u = rng.uniform();
        std::size_t pick = probs.size() - 1;
        double cum = 0.0;
        for (std::size_t r = 0; r < probs.size(); ++r) {
            cum += probs[r];
            if (u < cum) {
                pick = r;
                break;
            }
        }
        const auto nv = n.cartesian();
        const auto& g = prep.outcomes[pick].guess;
        stats.add(0.5 * (1.0 + nv[0] * g[0] + nv[1] * g[1] + nv[2] * g[2]));
    }
    return stats;
}

void require_simulable(const CoupledState& state, const PovmSpec& povm) {
    state.validate();
    if (povm.kind != PovmSpec::Kind::discrete)
        throw std::invalid_argument("simulation requires a discrete measurement");
    if (state.J != povm.reference.J) throw std::invalid_argument("simulation: spin mismatch");
    if (state.min_j() < povm.reference.mB)
        throw std::invalid_argument("simulation: signal occupies blocks the measurement cannot see");
    const double residual = verify_completeness(povm);
    if (residual > 1e-8)
        throw std::invalid_argument("simulation: measurement incomplete (residual " +
                                    std::to_string(residual) + ")");
}

}  // namespace

std::vector<double> outcome_probabilities(const CoupledState& state, const Direction& n,
                                          const PovmSpec& povm) {
    require_simulable(state, povm);
    const PreparedPovm prep = prepare(state, povm);
    std::vector<double> probs;
    probabilities_at(prep, n, probs);
    return probs;
}

SimReport simulate(const CoupledState& state, const PovmSpec& povm, long long trials,
                   std::uint64_t seed, int workers, std::optional<double> analytic_target) {
    if (trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
    if (workers < 1) workers = 1;
    if (static_cast<long long>(workers) > trials) workers = static_cast<int>(trials);
    require_simulable(state, povm);
    const PreparedPovm prep = prepare(state, povm);

    std::vector<RunningStats> parts(static_cast<std::size_t>(workers));
    if (workers == 1) {
        parts[0] = run_worker(prep, trials, seed);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const long long base = trials / workers;
        const long long extra = trials % workers;
        for (int w = 0; w < workers; ++w) {
            const long long quota = base + (w < extra ? 1 : 0);
            pool.emplace_back([&prep, &parts, w, quota, seed] {
                parts[static_cast<std::size_t>(w)] = run_worker(prep, quota, seed + static_cast<std::uint64_t>(w));
            });
        }
        for (auto& t : pool) t.join();
    }

    RunningStats total;
    for (const auto& part : parts) total = RunningStats::merge(total, part);
    // The reported mean is the trial-weighted mean of the parts, evaluated in
    // worker order as a single expression, so merged and per-part runs agree
    // exactly.
    double weighted = 0.0;
    for (const auto& part : parts) weighted += static_cast<double>(part.count) * part.mean;

    SimReport report;
    report.trials = trials;
    report.seed = seed;
    report.mean_fidelity = parts.size() == 1 ? parts[0].mean : weighted / static_cast<double>(trials);
    report.std_error = total.std_error();
    report.analytic_target = analytic_target;
    report.workers = workers;
    return report;
}

std::optional<double> SimReport::sigma_distance() const {
    if (!analytic_target || std_error <= 0.0) return std::nullopt;
    return std::abs(mean_fidelity - *analytic_target) / std_error;
}

nlohmann::json to_json(const SimReport& report) {
    nlohmann::json out;
    out["trials"] = report.trials;
    out["seed"] = report.seed;
    out["mean"] = sig15(report.mean_fidelity);
    out["stderr"] = sig15(report.std_error);
    out["workers"] = report.workers;
    if (report.analytic_target) {
        out["target"] = sig15(*report.analytic_target);
        if (const auto sigma = report.sigma_distance()) out["sigma_distance"] = sig15(*sigma);
    }
    return out;
}

}  // namespace spindir
