#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "spindir/jacobi.hpp"

using namespace spindir;

TEST_CASE("degree zero and the explicit low-degree polynomials") {
    CHECK(jacobi_eval(0, 3, 7, 0.37) == 1.0);
    // P_1^{0,1}(x) = (3x - 1)/2, root at 1/3.
    for (const double x : {-0.9, 0.0, 0.4, 1.0})
        CHECK(jacobi_eval(1, 0, 1, x) == doctest::Approx((3.0 * x - 1.0) / 2.0).epsilon(1e-14));
    CHECK(std::abs(jacobi_eval(1, 0, 1, 1.0 / 3.0)) < 1e-15);
    // P_2^{0,1} has the roots of 5x^2 - 2x - 1.
    const double r1 = (1.0 + std::sqrt(6.0)) / 5.0;
    const double r2 = (1.0 - std::sqrt(6.0)) / 5.0;
    CHECK(std::abs(jacobi_eval(2, 0, 1, r1)) < 1e-14);
    CHECK(std::abs(jacobi_eval(2, 0, 1, r2)) < 1e-14);
}

TEST_CASE("largest zeros of the table-anchoring polynomials") {
    CHECK(largest_zero_value(2, 0, 0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(largest_zero_value(3, 0, 0) == doctest::Approx(std::sqrt(3.0 / 5.0)).epsilon(1e-13));
    CHECK(largest_zero_value(2, 0, 1) == doctest::Approx((1.0 + std::sqrt(6.0)) / 5.0).epsilon(1e-13));
    CHECK(largest_zero_value(1, 0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("zero report converges with a tiny residual") {
    const ZeroReport report = largest_zero({17, 2, 5});
    CHECK(report.largest_zero > -1.0);
    CHECK(report.largest_zero < 1.0);
    CHECK(report.iterations <= 200);
    CHECK(report.residual < 1e-12 * jacobi_leading_coefficient({17, 2, 5}));
    CHECK(std::abs(jacobi_eval(17, 2, 5, report.largest_zero)) == report.residual);
}

TEST_CASE("differentiation identity: closed forms and a finite-difference sweep") {
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(-1.0 + 2.0 * i / 100.0);

    // d/dx P_1^{0,0} = 1 = (2/2) P_0^{1,1}.
    CHECK(verify_differentiation({1, 0, 0}, grid) < 1e-9);
    // d/dx P_2^{0,0} = 3x = (3/2) P_1^{1,1} with P_1^{1,1}(x) = 2x.
    for (const double x : {-0.5, 0.2, 0.9})
        CHECK(jacobi_eval(1, 1, 1, x) == doctest::Approx(2.0 * x).epsilon(1e-14));
    CHECK(verify_differentiation({2, 0, 0}, grid) < 1e-8);
    CHECK(verify_differentiation({5, 1, 2}, grid) < 1e-6);
    // At degree 20 the h^2 P'''/6 truncation term dominates near the
    // endpoints; the identity still holds to a scale-relative 1e-6.
    const double raw = verify_differentiation({20, 0, 3}, grid);
    CHECK(raw < 1e-2);
    double deriv_peak = 0.0;
    for (const double x : grid)
        deriv_peak = std::max(deriv_peak, std::abs(12.0 * jacobi_eval(19, 1, 4, x)));
    CHECK(raw / deriv_peak < 1e-6);
}

TEST_CASE("parameter-shift identities hold on a grid including the endpoint") {
    std::vector<double> grid;
    for (int i = 0; i <= 49; ++i) grid.push_back(-1.0 + 2.0 * i / 49.0);
    CHECK(grid.back() == 1.0);

    // n=1, a=0, b=1: 3x = 2 (3x-1)/2 + 1.
    CHECK(verify_b_relations({1, 0, 1}, grid) < 1e-14);
    for (const auto& [n, a, b] : std::vector<std::array<int, 3>>{{4, 0, 2}, {7, 1, 1}, {20, 1, 3}})
        CHECK(verify_b_relations({n, a, b}, grid) < 1e-10);
    // Identity values reach ~1e6 at the endpoint for (20, 2, 6), so the
    // residual there is roundoff at that scale.
    CHECK(verify_b_relations({20, 2, 6}, grid) < 1e-8);
    CHECK_THROWS_AS(verify_b_relations({3, 0, 0}, grid), std::domain_error);
}

TEST_CASE("zero-shift inequalities: explicit instances") {
    // P_1^{1,2}(x) = 2 + 5(x-1)/2 has its zero at 1/5 < x_2^{0,0} = 1/sqrt(3).
    CHECK(largest_zero_value(1, 1, 2) == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(largest_zero_value(1, 1, 2) < largest_zero_value(2, 0, 0));
    // Chain x_1^{0,1} < x_2^{0,0} < x_2^{0,1}.
    CHECK(largest_zero_value(1, 0, 1) < largest_zero_value(2, 0, 0));
    CHECK(largest_zero_value(2, 0, 0) < largest_zero_value(2, 0, 1));
}

TEST_CASE("zero-shift inequality sweep has no violations") {
    const ZeroInequalityReport report = check_zero_inequalities(12, 6);
    CHECK(report.violations.empty());
    CHECK(report.min_margin > 0.0);
    CHECK(report.checked > 0);
}

TEST_CASE("zero-family maxima sit at the minimal parameters") {
    const ClmMax two = max_over_clm(HalfInt(2), HalfInt(0));
    CHECK(two.m_prime == HalfInt(0));
    CHECK(two.m_double_prime == HalfInt(0));
    CHECK(two.value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));

    // l=1, m=0: only the degree-1 entry survives, P_1 = x.
    const ClmMax one = max_over_clm(HalfInt(1), HalfInt(0));
    CHECK(one.m_prime == HalfInt(0));
    CHECK(one.m_double_prime == HalfInt(0));
    CHECK(std::abs(one.value) < 1e-15);

    const ClmMax five = max_over_clm(HalfInt(5), HalfInt(1));
    CHECK(five.m_prime == HalfInt(1));
    CHECK(five.m_double_prime == HalfInt(1));
    CHECK(five.value == doctest::Approx(largest_zero_value(4, 0, 2)).epsilon(1e-13));

    // Half-integer family, as used by odd spin counts.
    const ClmMax half = max_over_clm(HalfInt::from_twice(5), HalfInt::half());
    CHECK(half.m_prime == HalfInt::half());
    CHECK(half.value == doctest::Approx(largest_zero_value(2, 0, 1)).epsilon(1e-13));

    // All entries have degree zero: the set is empty.
    CHECK_THROWS_AS(max_over_clm(HalfInt(1), HalfInt(1)), std::invalid_argument);
    CHECK_THROWS_AS(max_over_clm(HalfInt(2), HalfInt::half()), std::domain_error);
}

TEST_CASE("interlacing and positivity above the largest zero") {
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {2, 5}}) {
        double prev = -1.0;
        for (int n = 1; n <= 15; ++n) {
            const double z = largest_zero_value(n, a, b);
            CHECK(z > prev);
            CHECK(z < 1.0);
            prev = z;
            for (int i = 1; i <= 20; ++i) {
                const double x = z + 1e-9 + (1.0 - z - 1e-9) * i / 20.0;
                CHECK(jacobi_eval(n, a, b, x) > 0.0);
            }
        }
    }
}

TEST_CASE("leading coefficient matches the chosen normalization") {
    // P_n(x)/x^n = A_n (1 + (sum of zeros)/x + ...), so the deviation shrinks
    // like 1/x; far out it pins A_n to the stated normalization.
    for (int n = 1; n <= 10; ++n) {
        const JacobiParams p{n, 1, 3};
        const auto rel_dev = [&](double x) {
            const double lead = jacobi_leading_coefficient(p);
            return std::abs(jacobi_eval(p, x) / std::pow(x, n) - lead) / lead;
        };
        CHECK(rel_dev(1e7) < 1e-6);
        CHECK(rel_dev(1e5) < rel_dev(1e3));
    }
    // A_2^{0,0} = 3/2 (Legendre).
    CHECK(jacobi_leading_coefficient({2, 0, 0}) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("large-degree zero estimate") {
    const double xi2 = kBesselJ0FirstZero * kBesselJ0FirstZero;
    CHECK(asymptotic_zero(100, 0) ==
          doctest::Approx(1.0 - xi2 / 20000.0 * 0.99).epsilon(1e-15));
    CHECK(asymptotic_zero(50000000, 3) == doctest::Approx(1.0).epsilon(1e-12));

    // Error falls off as the fourth power: fit the constant on a coarse pair
    // and check the half-degree point against it.
    const auto err = [&](int n) { return std::abs(largest_zero_value(n, 0, 1) - asymptotic_zero(n, 1)); };
    const double c25 = err(25) * std::pow(25.0, 4);
    const double c100 = err(100) * std::pow(100.0, 4);
    const double c = std::max(c25, c100) * 1.2;
    CHECK(err(50) < c / std::pow(50.0, 4));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(largest_zero({0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(jacobi_eval(-1, 0, 0, 0.0), std::domain_error);
    CHECK_THROWS_AS(asymptotic_zero(0, 0), std::domain_error);
    CHECK_THROWS_AS(check_zero_inequalities(1, 3), std::domain_error);
}
