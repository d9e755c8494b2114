#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "spindir/half_int.hpp"
#include "spindir/verify.hpp"

namespace spindir {

// Exit-code contract: 0 success, 1 property failure, 2 usage error. Usage
// errors are raised as std::invalid_argument / std::domain_error and mapped
// by the binary.
struct CommandResult {
    int exit_code = 0;
    std::string output;  // JSON (or CSV for table --format csv), newline-terminated
};

CommandResult cmd_table(int n_max, const std::string& format);
CommandResult cmd_fidelity(int n_spins, std::optional<HalfInt> mA, std::optional<HalfInt> mB);
CommandResult cmd_verify(const std::string& suite, FaultInjection fault = FaultInjection::none);
CommandResult cmd_simulate(int n_spins, const std::string& povm_name, long long trials,
                           std::uint64_t seed, int workers);
CommandResult cmd_decompose(const std::string& pattern);

// Closed forms for the first rows of the fidelity table.
std::optional<std::string> exact_form(int n_spins);

}  // namespace spindir
