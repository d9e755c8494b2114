#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "spindir/multiplicity.hpp"
#include "spindir/sampling.hpp"

using namespace spindir;

namespace {
const HalfInt h = HalfInt::half();

double total_norm(const MultiplicityState& s) {
    double norm = 0.0;
    for (const auto& block : s.blocks)
        for (const double a : block) norm += a * a;
    return norm;
}
}  // namespace

TEST_CASE("multiplicity counts follow the coupling walk") {
    CHECK(multiplicity_count(2, HalfInt(1)) == 1);
    CHECK(multiplicity_count(2, HalfInt(0)) == 1);
    CHECK(multiplicity_count(4, HalfInt(2)) == 1);
    CHECK(multiplicity_count(4, HalfInt(1)) == 3);
    CHECK(multiplicity_count(4, HalfInt(0)) == 2);
    CHECK(multiplicity_count(3, h) == 2);
    CHECK(multiplicity_count(4, h) == 0);  // parity mismatch
    // Dimensions add up to 2^N.
    for (const int n : {3, 6, 9, 12}) {
        long long dim = 0;
        for (int tj = n % 2; tj <= n; tj += 2)
            dim += static_cast<long long>(multiplicity_count(n, HalfInt::from_twice(tj))) * (tj + 1);
        CHECK(dim == (1LL << n));
    }
}

TEST_CASE("stretched and antiparallel two-spin patterns") {
    const MultiplicityState uu = decompose_product("uu");
    CHECK(uu.mA == HalfInt(1));
    REQUIRE(uu.blocks.size() == 1);
    CHECK(uu.blocks[0][0] == doctest::Approx(1.0).epsilon(1e-14));

    const MultiplicityState ud = decompose_product("ud");
    CHECK(ud.mA == HalfInt(0));
    REQUIRE(ud.blocks.size() == 2);
    CHECK(std::abs(ud.blocks[0][0]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::abs(ud.blocks[1][0]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("block structure carries the true multiplicities") {
    const MultiplicityState s = decompose_product("uudd");
    CHECK(s.mA == HalfInt(0));
    REQUIRE(s.blocks.size() == 3);
    CHECK(s.blocks[0].size() == 2);  // two singlet paths
    CHECK(s.blocks[1].size() == 3);  // three spin-1 paths
    CHECK(s.blocks[2].size() == 1);
    CHECK(total_norm(s) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("four-spin product state reduces to the known effective components") {
    const CoupledState eff = effective_components(decompose_product("uudd"));
    CHECK(eff.component(HalfInt(2)) == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-13));
    CHECK(eff.component(HalfInt(1)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(eff.component(HalfInt(0)) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));

    // Every two-up-two-down pattern reduces identically.
    for (const char* p : {"udud", "uddu", "dudu", "dduu"}) {
        const CoupledState other = effective_components(decompose_product(p));
        for (int tj = 0; tj <= 4; tj += 2)
            CHECK(other.component(HalfInt::from_twice(tj)) ==
                  doctest::Approx(eff.component(HalfInt::from_twice(tj))).epsilon(1e-12));
    }

    const double f = general_fidelity(eff, HalfInt(0));
    CHECK(f == doctest::Approx((15.0 + 5.0 * std::sqrt(2.0) + 2.0 * std::sqrt(5.0)) / 30.0).epsilon(1e-13));
}

TEST_CASE("single-occurrence reduction is the identity map") {
    const MultiplicityState two = decompose_product("ud");
    const CoupledState eff = effective_components(two);
    CHECK(eff.component(HalfInt(0)) == doctest::Approx(std::abs(two.blocks[0][0])).epsilon(1e-15));
    CHECK(eff.component(HalfInt(1)) == doctest::Approx(std::abs(two.blocks[1][0])).epsilon(1e-15));
}

TEST_CASE("negative total m maps to its mirror sector") {
    const CoupledState eff = effective_components(decompose_product("ddd"));
    CHECK(eff.mA == HalfInt::from_twice(3));
    CHECK(eff.component(HalfInt::from_twice(3)) == doctest::Approx(1.0).epsilon(1e-14));

    const CoupledState tilted = effective_components(decompose_product("ddu"));
    CHECK(tilted.mA == h);
    const CoupledState mirrored = effective_components(decompose_product("uud"));
    CHECK(tilted.component(h) == doctest::Approx(mirrored.component(h)).epsilon(1e-13));
    CHECK(tilted.component(HalfInt::from_twice(3)) ==
          doctest::Approx(mirrored.component(HalfInt::from_twice(3))).epsilon(1e-13));
}

TEST_CASE("random patterns stay normalized and reduce consistently") {
    Rng rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        std::string pattern;
        const int n = 1 + static_cast<int>(rng.uniform() * 12.0);
        for (int i = 0; i < n; ++i) pattern.push_back(rng.uniform() < 0.5 ? 'u' : 'd');
        const MultiplicityState s = decompose_product(pattern);
        CHECK(total_norm(s) == doctest::Approx(1.0).epsilon(1e-12));
        const CoupledState eff = effective_components(s);
        double norm = 0.0;
        for (const double c : eff.components) norm += c * c;
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t i = 0; i < s.blocks.size(); ++i)
            CHECK(static_cast<int>(s.blocks[i].size()) ==
                  multiplicity_count(n, s.block_j(static_cast<int>(i))));
    }
}

TEST_CASE("pattern validation") {
    CHECK_THROWS_AS(decompose_product(""), std::invalid_argument);
    CHECK_THROWS_AS(decompose_product("uuddx"), std::invalid_argument);
    CHECK_THROWS_AS(decompose_product("uuuuuuuuuuuuu"), std::invalid_argument);  // 13 spins
}
