#pragma once

#include <string>

#include "json.hpp"

namespace spindir {

inline constexpr const char* kToolVersion = "spindir 1.0.0";

// Round a double through its 15-significant-digit decimal form, so JSON and
// CSV emissions of the same quantity agree exactly when re-parsed.
double sig15(double value);

std::string format_sig15(double value);

// Report envelope shared by every command:
// {command, parameters, results, tool_version}.
nlohmann::json make_envelope(const std::string& command, nlohmann::json parameters,
                             nlohmann::json results);

}  // namespace spindir
