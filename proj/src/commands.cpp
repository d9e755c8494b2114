#include "spindir/commands.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spindir/fidelity.hpp"
#include "spindir/jacobi.hpp"
#include "spindir/montecarlo.hpp"
#include "spindir/multiplicity.hpp"
#include "spindir/povm.hpp"
#include "spindir/report.hpp"

namespace spindir {

namespace {

nlohmann::json state_to_json(const CoupledState& state) {
    nlohmann::json out;
    out["J2"] = state.J.twice();
    out["mA2"] = state.mA.twice();
    out["components"] = nlohmann::json::array();
    for (HalfInt j = state.min_j(); j <= state.J; j = j + HalfInt(1))
        out["components"].push_back({{"j", to_string(j)}, {"amplitude", sig15(state.component(j))}});
    return out;
}

struct TableRow {
    int n;
    double fidelity;
    std::optional<std::string> exact;
    long long dimension;
    double parallel;
};

std::vector<TableRow> table_rows(int n_max) {
    std::vector<TableRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const FidelityResult res = optimal_fidelity(n);
        rows.push_back({n, sig15(res.fidelity), exact_form(n), res.effective_dimension,
                        sig15((n + 1.0) / (n + 2.0))});
    }
    return rows;
}

}  // namespace

std::optional<std::string> exact_form(int n_spins) {
    switch (n_spins) {
        case 1: return "2/3";
        case 2: return "(3+sqrt(3))/6";
        case 3: return "(6+sqrt(6))/10";
        case 4: return "(5+sqrt(15))/10";
        default: return std::nullopt;
    }
}

CommandResult cmd_table(int n_max, const std::string& format) {
    if (n_max < 1 || n_max > 300)
        throw std::invalid_argument("table: --n-max must be in [1, 300]");
    if (format != "json" && format != "csv")
        throw std::invalid_argument("table: --format must be json or csv");

    const auto rows = table_rows(n_max);
    if (format == "csv") {
        std::ostringstream csv;
        csv << "N,fidelity,exact_form,effective_dimension,parallel_fidelity\n";
        for (const auto& row : rows)
            csv << row.n << ',' << format_sig15(row.fidelity) << ',' << row.exact.value_or("") << ','
                << row.dimension << ',' << format_sig15(row.parallel) << '\n';
        return {0, csv.str()};
    }

    nlohmann::json results;
    results["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r{{"N", row.n},
                         {"fidelity", row.fidelity},
                         {"effective_dimension", row.dimension},
                         {"parallel_fidelity", row.parallel}};
        if (row.exact) r["exact_form"] = *row.exact;
        results["rows"].push_back(std::move(r));
    }
    const nlohmann::json envelope =
        make_envelope("table", {{"n_max", n_max}, {"format", format}}, std::move(results));
    return {0, envelope.dump(2) + "\n"};
}

CommandResult cmd_fidelity(int n_spins, std::optional<HalfInt> mA, std::optional<HalfInt> mB) {
    if (n_spins < 1 || n_spins > 300)
        throw std::invalid_argument("fidelity: --spins must be in [1, 300]");
    const HalfInt J = HalfInt::from_twice(n_spins);
    const HalfInt m_min = J.is_integer() ? HalfInt(0) : HalfInt::half();
    const HalfInt a_sector = mA.value_or(m_min);
    const HalfInt b_sector = mB.value_or(m_min);

    const FidelityResult res = optimal_fidelity(J, a_sector, b_sector);
    const auto matrix = build_matrix(J, a_sector, b_sector);

    const HalfInt m = std::max(a_sector, b_sector);
    const int degree = (J + HalfInt(1) - m).twice() / 2;
    const int a = spindir::abs(b_sector - a_sector).twice() / 2;
    const int b = (a_sector + b_sector).twice() / 2;
    const ZeroReport zero = largest_zero({degree, a, b});

    nlohmann::json results;
    results["fidelity"] = sig15(res.fidelity);
    results["top_eigenvalue"] = sig15(res.top_eigenvalue);
    results["effective_dimension"] = res.effective_dimension;
    results["optimal_state"] = state_to_json(res.optimal_state);
    results["matrix"] = {{"size", matrix.size()}, {"diag", matrix.diag}, {"offdiag", matrix.offdiag}};
    results["jacobi"] = {{"degree", degree},
                         {"a", a},
                         {"b", b},
                         {"largest_zero", sig15(zero.largest_zero)},
                         {"eigenvalue_minus_zero", sig15(res.top_eigenvalue - zero.largest_zero)}};
    const nlohmann::json envelope = make_envelope(
        "fidelity",
        {{"spins", n_spins}, {"ma", to_string(a_sector)}, {"mb", to_string(b_sector)}},
        std::move(results));
    return {0, envelope.dump(2) + "\n"};
}

CommandResult cmd_verify(const std::string& suite, FaultInjection fault) {
    const SuiteReport report = run_suite(suite, fault);
    const nlohmann::json envelope =
        make_envelope("verify", {{"suite", suite}}, to_json(report));
    return {report.all_pass() ? 0 : 1, envelope.dump(2) + "\n"};
}

CommandResult cmd_simulate(int n_spins, const std::string& povm_name, long long trials,
                           std::uint64_t seed, int workers) {
    if (trials < 1) throw std::invalid_argument("simulate: --trials must be >= 1");

    PovmSpec povm;
    if (povm_name == "tetrahedron") {
        if (n_spins != 2) throw std::invalid_argument("simulate: the tetrahedron decodes 2 spins");
        povm = tetrahedron_povm();
    } else if (povm_name == "octahedron") {
        if (n_spins != 3) throw std::invalid_argument("simulate: the octahedron decodes 3 spins");
        povm = octahedron_povm(HalfInt::half());
    } else {
        throw std::invalid_argument("simulate: --povm must be tetrahedron or octahedron");
    }

    const FidelityResult analytic = optimal_fidelity(n_spins);
    const SimReport report =
        simulate(analytic.optimal_state, povm, trials, seed, workers, analytic.fidelity);

    nlohmann::json results = to_json(report);
    results["povm"] = to_json(povm);
    const nlohmann::json envelope = make_envelope("simulate",
                                                  {{"spins", n_spins},
                                                   {"povm", povm_name},
                                                   {"trials", trials},
                                                   {"seed", seed},
                                                   {"workers", workers}},
                                                  std::move(results));
    return {0, envelope.dump(2) + "\n"};
}

CommandResult cmd_decompose(const std::string& pattern) {
    const MultiplicityState state = decompose_product(pattern);
    const CoupledState effective = effective_components(state);
    const int n = static_cast<int>(pattern.size());

    // For a fixed sector the best decoding matches it, mB = |mA|.
    const HalfInt mB = effective.mA;
    const double fidelity = general_fidelity(effective, mB);
    const FidelityResult best = optimal_fidelity(n);

    nlohmann::json results;
    results["mA2"] = state.mA.twice();
    results["effective_components"] = state_to_json(effective);
    results["fidelity"] = sig15(fidelity);
    results["optimal_fidelity"] = sig15(best.fidelity);
    results["gap_to_optimal"] = sig15(best.fidelity - fidelity);
    nlohmann::json occupancy = nlohmann::json::array();
    for (std::size_t i = 0; i < state.blocks.size(); ++i)
        occupancy.push_back({{"j", to_string(state.block_j(static_cast<int>(i)))},
                             {"occurrences", state.blocks[i].size()}});
    results["block_occupancy"] = std::move(occupancy);
    const nlohmann::json envelope =
        make_envelope("decompose", {{"pattern", pattern}}, std::move(results));
    return {0, envelope.dump(2) + "\n"};
}

}  // namespace spindir
