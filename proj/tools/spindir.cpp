// Command-line surface: every computation is emitted as a reproducible JSON
// (or CSV) report on stdout; diagnostics go to stderr. Exit codes: 0 ok,
// 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spindir/commands.hpp"
#include "spindir/half_int.hpp"
#include "spindir/report.hpp"

namespace {

int worker_cap() {
    if (const char* env = std::getenv("SPINDIR_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

spindir::FaultInjection fault_from_env() {
    if (const char* env = std::getenv("SPINDIR_INJECT_FAULT")) {
        if (std::string(env) == "nu_sign") return spindir::FaultInjection::flip_nu_sign;
    }
    return spindir::FaultInjection::none;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal encoding and decoding of a spatial direction in N spin-1/2 particles"};
    app.set_version_flag("--version", spindir::kToolVersion);
    app.require_subcommand(1);

    int n_max = 7;
    std::string format = "json";
    auto* table = app.add_subcommand("table", "Maximal fidelities F_N up to --n-max");
    table->add_option("--n-max", n_max, "Largest number of spins (1..300)")->capture_default_str();
    table->add_option("--format", format, "Output format: json or csv")->capture_default_str();

    int spins = 2;
    std::string ma_text, mb_text;
    auto* fidelity = app.add_subcommand("fidelity", "Maximal fidelity, optimal state and matrix data");
    fidelity->add_option("--spins", spins, "Number of spin-1/2 particles")->required();
    fidelity->add_option("--ma", ma_text, "Sender sector mA (integer or 'p/2'; default: minimal)");
    fidelity->add_option("--mb", mb_text, "Decoder sector mB (integer or 'p/2'; default: minimal)");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a property suite; exit 0 iff it passes");
    verify->add_option("--suite", suite, "jacobi | povm | orthogonality | multiplicity | asymptotics")
        ->required();

    int sim_spins = 2;
    std::string povm_name = "tetrahedron";
    long long trials = 1000000;
    std::uint64_t seed = 1;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo decoding experiment");
    simulate->add_option("--spins", sim_spins, "Number of spins (2 or 3)")->required();
    simulate->add_option("--povm", povm_name, "tetrahedron | octahedron")->capture_default_str();
    simulate->add_option("--trials", trials, "Number of trials")->capture_default_str();
    simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();

    std::string pattern;
    auto* decompose = app.add_subcommand("decompose", "Coupled-basis reduction of a product state");
    decompose->add_option("--pattern", pattern, "Spin pattern, e.g. uudd")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        spindir::CommandResult result;
        if (*table) {
            result = spindir::cmd_table(n_max, format);
        } else if (*fidelity) {
            std::optional<spindir::HalfInt> ma, mb;
            if (!ma_text.empty()) ma = spindir::parse_half_int(ma_text);
            if (!mb_text.empty()) mb = spindir::parse_half_int(mb_text);
            result = spindir::cmd_fidelity(spins, ma, mb);
        } else if (*verify) {
            result = spindir::cmd_verify(suite, fault_from_env());
        } else if (*simulate) {
            result = spindir::cmd_simulate(sim_spins, povm_name, trials, seed, worker_cap());
        } else if (*decompose) {
            result = spindir::cmd_decompose(pattern);
        }
        std::cout << result.output;
        return result.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
