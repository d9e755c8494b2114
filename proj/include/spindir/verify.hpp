#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace spindir {

struct CheckResult {
    std::string name;
    bool pass = false;
    double metric = 0.0;  // measured value (usually a worst-case deviation)
    double bound = 0.0;   // threshold the metric is held to
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
};

// Used by the test harness to demonstrate that the suites detect a broken
// build: flip_nu_sign negates the coupling in the suite's independent
// fidelity formula, which must then disagree with the eigenvalue route.
enum class FaultInjection { none, flip_nu_sign };

std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& name, FaultInjection fault = FaultInjection::none);

nlohmann::json to_json(const SuiteReport& report);

}  // namespace spindir
