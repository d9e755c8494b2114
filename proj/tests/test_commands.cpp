#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "spindir/commands.hpp"
#include "spindir/report.hpp"
#include "spindir/verify.hpp"

using namespace spindir;

TEST_CASE("sig15 rounding round-trips through its decimal form") {
    const double value = 0.78867513459480287;  // more digits than kept
    const double rounded = sig15(value);
    CHECK(format_sig15(rounded) == format_sig15(value));
    CHECK(std::strtod(format_sig15(value).c_str(), nullptr) == rounded);
}

TEST_CASE("envelope round-trips losslessly") {
    const nlohmann::json envelope =
        make_envelope("table", {{"n_max", 3}}, {{"rows", {1, 2, 3}}});
    const nlohmann::json back = nlohmann::json::parse(envelope.dump());
    CHECK(back == envelope);
    CHECK(back.at("tool_version") == kToolVersion);
    CHECK(back.at("command") == "table");
}

TEST_CASE("table command: values, formats and range checks") {
    const CommandResult json_out = cmd_table(7, "json");
    CHECK(json_out.exit_code == 0);
    const nlohmann::json env = nlohmann::json::parse(json_out.output);
    const auto& rows = env.at("results").at("rows");
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].at("fidelity").get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(rows[1].at("exact_form") == "(3+sqrt(3))/6");
    CHECK(rows[3].at("fidelity").get<double>() ==
          doctest::Approx((5.0 + std::sqrt(15.0)) / 10.0).epsilon(1e-12));
    // Four-decimal agreement for the numeric rows.
    CHECK(std::abs(rows[4].at("fidelity").get<double>() - 0.9114) < 5e-5);
    CHECK(std::abs(rows[5].at("fidelity").get<double>() - 0.9306) < 5e-5);
    CHECK(std::abs(rows[6].at("fidelity").get<double>() - 0.9429) < 5e-5);
    CHECK(rows[6].contains("exact_form") == false);
    CHECK(rows[3].at("effective_dimension") == 9);
    CHECK(rows[4].at("effective_dimension") == 12);

    // CSV and JSON carry identical numbers.
    const CommandResult csv_out = cmd_table(7, "csv");
    std::istringstream csv(csv_out.output);
    std::string line;
    std::getline(csv, line);  // header
    for (int n = 1; n <= 7; ++n) {
        REQUIRE(std::getline(csv, line));
        std::istringstream fields(line);
        std::string cell;
        std::getline(fields, cell, ',');
        CHECK(std::stoi(cell) == n);
        std::getline(fields, cell, ',');
        CHECK(std::strtod(cell.c_str(), nullptr) ==
              rows[static_cast<std::size_t>(n - 1)].at("fidelity").get<double>());
    }

    CHECK_THROWS_AS(cmd_table(0, "json"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_table(301, "json"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_table(5, "xml"), std::invalid_argument);
}

TEST_CASE("deep table rows approach the quadratic asymptote") {
    const nlohmann::json env = nlohmann::json::parse(cmd_table(200, "json").output);
    const auto& rows = env.at("results").at("rows");
    REQUIRE(rows.size() == 200);
    const double last = rows[199].at("fidelity").get<double>();
    const double xi2 = 2.404825557695773 * 2.404825557695773;
    CHECK(1.0 - last < 1.05 * xi2 / (200.0 * 200.0));
    CHECK(1.0 - last > 0.0);
}

TEST_CASE("identical invocations produce identical output") {
    CHECK(cmd_table(9, "json").output == cmd_table(9, "json").output);
    CHECK(cmd_fidelity(3, {}, {}).output == cmd_fidelity(3, {}, {}).output);
    CHECK(cmd_simulate(2, "tetrahedron", 5000, 11, 1).output ==
          cmd_simulate(2, "tetrahedron", 5000, 11, 1).output);
}

TEST_CASE("fidelity command reports matrix and matching zero") {
    const CommandResult out = cmd_fidelity(4, HalfInt(1), HalfInt(1));
    const nlohmann::json env = nlohmann::json::parse(out.output);
    const auto& results = env.at("results");
    CHECK(results.at("fidelity").get<double>() ==
          doctest::Approx((10.0 + std::sqrt(10.0)) / 15.0).epsilon(1e-12));
    CHECK(results.at("jacobi").at("degree") == 2);
    CHECK(results.at("jacobi").at("a") == 0);
    CHECK(results.at("jacobi").at("b") == 2);
    CHECK(std::abs(results.at("jacobi").at("eigenvalue_minus_zero").get<double>()) < 1e-10);

    const nlohmann::json defaults =
        nlohmann::json::parse(cmd_fidelity(2, {}, {}).output);
    CHECK(defaults.at("results").at("fidelity").get<double>() ==
          doctest::Approx((3.0 + std::sqrt(3.0)) / 6.0).epsilon(1e-12));
    CHECK(defaults.at("parameters").at("ma") == "0");

    const nlohmann::json odd = nlohmann::json::parse(cmd_fidelity(3, {}, {}).output);
    CHECK(odd.at("parameters").at("ma") == "1/2");

    CHECK_THROWS_AS(cmd_fidelity(2, HalfInt(2), HalfInt(0)), std::domain_error);
    CHECK_THROWS_AS(cmd_fidelity(2, HalfInt::half(), {}), std::domain_error);  // parity
}

TEST_CASE("decompose command reports the reduction and the gap") {
    const CommandResult out = cmd_decompose("uudd");
    const nlohmann::json env = nlohmann::json::parse(out.output);
    const auto& results = env.at("results");
    const double expected = (15.0 + 5.0 * std::sqrt(2.0) + 2.0 * std::sqrt(5.0)) / 30.0;
    CHECK(results.at("fidelity").get<double>() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(results.at("gap_to_optimal").get<double>() > 0.0);

    const nlohmann::json uu = nlohmann::json::parse(cmd_decompose("uu").output);
    CHECK(uu.at("results").at("fidelity").get<double>() == doctest::Approx(0.75).epsilon(1e-12));

    const nlohmann::json ud = nlohmann::json::parse(cmd_decompose("ud").output);
    CHECK(ud.at("results").at("fidelity").get<double>() ==
          doctest::Approx((3.0 + std::sqrt(3.0)) / 6.0).epsilon(1e-12));
    CHECK(std::abs(ud.at("results").at("gap_to_optimal").get<double>()) < 1e-12);

    CHECK_THROWS_AS(cmd_decompose("uxd"), std::invalid_argument);
}

TEST_CASE("simulate command embeds the measurement and the sigma distance") {
    const CommandResult out = cmd_simulate(2, "tetrahedron", 20000, 7, 1);
    const nlohmann::json env = nlohmann::json::parse(out.output);
    const auto& results = env.at("results");
    CHECK(results.at("trials") == 20000);
    CHECK(results.at("povm").at("kind") == "discrete");
    CHECK(results.at("target").get<double>() ==
          doctest::Approx((3.0 + std::sqrt(3.0)) / 6.0).epsilon(1e-12));
    CHECK(results.contains("sigma_distance"));

    CHECK_THROWS_AS(cmd_simulate(3, "tetrahedron", 100, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cmd_simulate(2, "cube", 100, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cmd_simulate(2, "tetrahedron", 0, 1, 1), std::invalid_argument);
}

TEST_CASE("verify command: exit codes and fault detection") {
    const CommandResult ok = cmd_verify("asymptotics");
    CHECK(ok.exit_code == 0);
    const nlohmann::json env = nlohmann::json::parse(ok.output);
    CHECK(env.at("results").at("passed") == true);
    CHECK(env.at("results").at("failures") == 0);

    const CommandResult faulty = cmd_verify("multiplicity", FaultInjection::flip_nu_sign);
    CHECK(faulty.exit_code == 1);
    const nlohmann::json bad = nlohmann::json::parse(faulty.output);
    CHECK(bad.at("results").at("failures").get<int>() > 0);

    CHECK_THROWS_AS(cmd_verify("nonsense"), std::invalid_argument);
}

TEST_CASE("suite names cover the commands surface") {
    const auto names = suite_names();
    CHECK(names.size() == 5);
    for (const auto& name : names) {
        CAPTURE(name);
        CHECK_NOTHROW(static_cast<void>(0));
    }
}
