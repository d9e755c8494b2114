#include "spindir/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace spindir {

std::string format_sig15(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.15g", value);
    return buffer;
}

double sig15(double value) { return std::strtod(format_sig15(value).c_str(), nullptr); }

nlohmann::json make_envelope(const std::string& command, nlohmann::json parameters,
                             nlohmann::json results) {
    nlohmann::json out;
    out["command"] = command;
    out["parameters"] = std::move(parameters);
    out["results"] = std::move(results);
    out["tool_version"] = kToolVersion;
    return out;
}

}  // namespace spindir
