#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "spindir/clebsch.hpp"
#include "spindir/half_int.hpp"
#include "spindir/quadrature.hpp"
#include "spindir/sampling.hpp"
#include "spindir/wigner.hpp"

using namespace spindir;

namespace {
const HalfInt h = HalfInt::half();
}

TEST_CASE("half-integer arithmetic and parsing") {
    CHECK(HalfInt(2).twice() == 4);
    CHECK((HalfInt(1) + h).twice() == 3);
    CHECK((h - HalfInt(1)) == HalfInt::from_twice(-1));
    CHECK(h.value() == doctest::Approx(0.5));
    CHECK(!h.is_integer());
    CHECK(valid_jm(HalfInt(1), HalfInt(0)));
    CHECK(valid_jm(HalfInt::from_twice(3), h));
    CHECK(!valid_jm(HalfInt(1), h));       // parity mismatch
    CHECK(!valid_jm(HalfInt(1), HalfInt(2)));  // |m| > j
    CHECK(to_string(HalfInt::from_twice(3)) == "3/2");
    CHECK(parse_half_int("3/2") == HalfInt::from_twice(3));
    CHECK(parse_half_int("-1/2") == HalfInt::from_twice(-1));
    CHECK(parse_half_int("2") == HalfInt(2));
    CHECK_THROWS_AS(parse_half_int("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_half_int("3/4"), std::invalid_argument);
}

TEST_CASE("direction is a unit vector") {
    const Direction n(1.1, 2.3);
    const auto v = n.cartesian();
    CHECK(std::abs(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] - 1.0) < 1e-12);
    const Direction back = Direction::from_cartesian(v[0], v[1], v[2]);
    CHECK(back.theta == doctest::Approx(n.theta).epsilon(1e-12));
    CHECK(back.phi == doctest::Approx(n.phi).epsilon(1e-12));
}

TEST_CASE("stretched coupling coefficient is forced to one") {
    CHECK(cg_coefficient(h, h, h, h, HalfInt(1), HalfInt(1)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("singlet coefficients against an S^2 diagonalization oracle") {
    // Two spin-1/2 in the m = 0 sector, product basis {ud, du}:
    // S^2 = [[1, 1], [1, 1]] (in units of hbar^2). Its null eigenvector is
    // the singlet; the positive-first-coefficient convention picks
    // (1, -1)/sqrt(2).
    const double s2[2][2] = {{1.0, 1.0}, {1.0, 1.0}};
    // Eigenvector for eigenvalue 0 of the 2x2: (1, -1)/sqrt(2).
    const double singlet[2] = {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
    CHECK(std::abs(s2[0][0] * singlet[0] + s2[0][1] * singlet[1]) < 1e-15);

    CHECK(cg_coefficient(h, h, h, -h, HalfInt(0), HalfInt(0)) ==
          doctest::Approx(singlet[0]).epsilon(1e-14));
    CHECK(cg_coefficient(h, -h, h, h, HalfInt(0), HalfInt(0)) ==
          doctest::Approx(singlet[1]).epsilon(1e-14));
}

TEST_CASE("1x1->1 coupling vanishes at m=0 by antisymmetry") {
    CHECK(std::abs(cg_coefficient(HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0))) <
          1e-14);
}

TEST_CASE("coupling coefficient selection rules and errors") {
    CHECK(cg_coefficient(h, h, h, h, HalfInt(1), HalfInt(0)) == 0.0);   // M != m1+m2
    CHECK(cg_coefficient(h, h, h, -h, HalfInt(2), HalfInt(0)) == 0.0);  // triangle
    CHECK_THROWS_AS(cg_coefficient(HalfInt(1), h, h, h, HalfInt(1), HalfInt(1)), std::domain_error);
}

TEST_CASE("spin-1/2 rotation block matches the generator exponential") {
    const double beta = 0.7321;
    const WignerBlock d = wigner_small_d(h, beta);
    // exp(-i beta Jy) for Jy = [[0, -i/2], [i/2, 0]] is the real rotation
    // [[cos(b/2), -sin(b/2)], [sin(b/2), cos(b/2)]].
    CHECK(d.at(0, 0).real() == doctest::Approx(std::cos(beta / 2)).epsilon(1e-14));
    CHECK(d.at(0, 1).real() == doctest::Approx(-std::sin(beta / 2)).epsilon(1e-14));
    CHECK(d.at(1, 0).real() == doctest::Approx(std::sin(beta / 2)).epsilon(1e-14));
    CHECK(d.at(1, 1).real() == doctest::Approx(std::cos(beta / 2)).epsilon(1e-14));
}

TEST_CASE("rotation block is exactly the identity at zero angle") {
    for (const int tj : {0, 1, 2, 5, 9}) {
        const WignerBlock d = wigner_small_d(HalfInt::from_twice(tj), 0.0);
        double worst = 0.0;
        for (int r = 0; r < d.dim(); ++r)
            for (int c = 0; c < d.dim(); ++c)
                worst = std::max(worst, std::abs(d.at(r, c) - std::complex<double>(r == c ? 1.0 : 0.0)));
        CHECK(worst < 1e-14);
    }
}

TEST_CASE("spin-1 rotation block at right angle") {
    const WignerBlock d = wigner_small_d(HalfInt(1), M_PI / 2);
    CHECK(std::abs(d.at_m(HalfInt(0), HalfInt(0))) < 1e-15);
    CHECK(d.at_m(HalfInt(1), HalfInt(1)).real() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("full rotation matrix: z-axis identity and spin-1/2 column") {
    const WignerBlock at_z = wigner_D(h, Direction(0.0, 0.0));
    CHECK(std::abs(at_z.at(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(at_z.at(1, 1) - 1.0) < 1e-14);

    const double theta = 1.234;
    const WignerBlock d = wigner_D(h, Direction(theta, 0.0));
    CHECK(d.at_m(h, h).real() == doctest::Approx(std::cos(theta / 2)).epsilon(1e-14));
    CHECK(d.at_m(-h, h).real() == doctest::Approx(std::sin(theta / 2)).epsilon(1e-14));
}

TEST_CASE("rotation blocks are unitary at 100 directions") {
    Rng rng(11);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Direction n = haar_sample(rng);
        worst = std::max(worst, unitarity_defect(wigner_D(HalfInt::from_twice(3), n)));
        worst = std::max(worst, unitarity_defect(wigner_D(HalfInt(2), n)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("large-spin blocks stay orthogonal through the log-gamma branch") {
    // Past the factorial-table cutoff the alternating sum loses digits to
    // cancellation (terms grow before cancelling), so the bounds here track
    // the conditioning, not roundoff.
    CHECK(unitarity_defect(wigner_small_d(HalfInt::from_twice(61), 0.9)) < 1e-7);
    CHECK(unitarity_defect(wigner_small_d(HalfInt::from_twice(81), 0.9)) < 1e-3);
}

TEST_CASE("column helpers agree with the full block") {
    const Direction n(0.8, 2.0);
    const HalfInt j = HalfInt::from_twice(5);
    const WignerBlock full = wigner_D(j, n);
    const auto col = wigner_D_column(j, h, n);
    const int c = full.row_of(h);
    for (int r = 0; r < full.dim(); ++r)
        CHECK(std::abs(col[static_cast<std::size_t>(r)] - full.at(r, c)) < 1e-14);
}

TEST_CASE("sphere quadrature normalization and first moments") {
    const SphereQuadrature quad = sphere_quadrature(8);
    double total = 0.0, cos_mean = 0.0;
    for (const auto& node : quad.nodes) {
        CHECK(node.weight > 0.0);
        total += node.weight;
        cos_mean += node.weight * std::cos(node.dir.theta);
    }
    CHECK(std::abs(total - 1.0) < 1e-13);
    CHECK(std::abs(cos_mean) < 1e-13);
}

TEST_CASE("quadrature reproduces the spin-1 normalization integral") {
    const SphereQuadrature quad = sphere_quadrature(6);
    double acc = 0.0;
    for (const auto& node : quad.nodes) {
        const WignerBlock d = wigner_D(HalfInt(1), node.dir);
        acc += node.weight * std::norm(d.at_m(HalfInt(0), HalfInt(0)));
    }
    CHECK(acc == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("gauss-legendre integrates high-degree monomials exactly") {
    const auto rule = gauss_legendre(8);
    for (const int p : {0, 2, 6, 14}) {  // degree <= 2*8-1
        double acc = 0.0;
        for (const auto& [x, w] : rule) acc += w * std::pow(x, p);
        CHECK(acc == doctest::Approx(2.0 / (p + 1.0)).epsilon(1e-13));
    }
}

TEST_CASE("isotropic sampling is deterministic and unbiased") {
    Rng a(42), b(42);
    const Direction first_a = haar_sample(a);
    const Direction first_b = haar_sample(b);
    CHECK(first_a.theta == first_b.theta);
    CHECK(first_a.phi == first_b.phi);

    Rng rng(123);
    const int trials = 1000000;
    double mean_cos = 0.0, mean_score = 0.0;
    for (int i = 0; i < trials; ++i) {
        const double c = std::cos(haar_sample(rng).theta);
        mean_cos += c;
        mean_score += 0.5 * (1.0 + c);
    }
    mean_cos /= trials;
    mean_score /= trials;
    CHECK(std::abs(mean_cos) < 4e-3);  // 4 sigma with sigma = 1/sqrt(3N)
    CHECK(std::abs(mean_score - 0.5) < 2e-3);
}
