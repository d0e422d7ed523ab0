#include <doctest.h>

#include "preisach/core.hpp"
#include "test_util.hpp"

using namespace preisach;
using preisach::test::all_configs;
using preisach::test::all_permutations;
using preisach::test::cfg;
using preisach::test::perm;

TEST_CASE("make_permutation validates bijections") {
    const std::vector<std::size_t> fig{2, 3, 1};
    CHECK(make_permutation(fig).size() == 3);
    CHECK(perm({1}).size() == 1);

    CHECK_THROWS_WITH_AS(perm({2, 2, 1}), "duplicate value 2", Error);
    CHECK_THROWS_WITH_AS(perm({1, 4, 2}), "value 4 out of range 1..3", Error);
    CHECK_THROWS_WITH_AS(perm({0, 1}), "value 0 out of range 1..2", Error);
    CHECK_THROWS_AS(Permutation(std::vector<std::size_t>{}), Error);
}

TEST_CASE("invert") {
    CHECK(invert(perm({1, 2, 3})) == perm({1, 2, 3}));
    CHECK(invert(perm({2, 3, 1})) == perm({3, 1, 2}));
    CHECK(invert(perm({2, 1})) == perm({2, 1}));

    for (const auto& rho : all_permutations(5)) {
        const auto inv = invert(rho);
        for (std::size_t i = 1; i <= 5; ++i) {
            REQUIRE(inv.at(rho.at(i)) == i);
            REQUIRE(rho.at(inv.at(i)) == i);
        }
    }
}

TEST_CASE("sub-permutations") {
    CHECK(restrict_to_values(perm({2, 4, 3, 1}), 3) == perm({2, 3, 1}));
    CHECK(restrict_to_values(perm({2, 4, 3, 1}), 1) == perm({1}));
    CHECK(remove_largest(perm({2, 3, 1})) == perm({2, 1}));
    CHECK(prefix_pattern(perm({2, 3, 1}), 1) == perm({1}));
    CHECK(prefix_pattern(perm({5, 2, 4, 1, 3}), 3) == perm({3, 1, 2}));
}

TEST_CASE("spin configurations") {
    const auto s = cfg("+-+");
    CHECK(s.size() == 3);
    CHECK(s.spin(1) == 1);
    CHECK(s.spin(2) == -1);
    CHECK(s.up_count() == 2);
    CHECK(s.flipped(2) == SpinConfig::omega(3));
    CHECK(SpinConfig::alpha(3).to_string() == "---");
    CHECK(SpinConfig::alpha(3).is_alpha());
    CHECK(SpinConfig::omega(2).is_omega());
    CHECK_THROWS_AS(SpinConfig(std::vector<std::int8_t>{1, 0}), Error);

    // lexicographic with -1 < +1; canonical order puts fewer +1 spins first
    CHECK(cfg("-+") < cfg("+-"));
    CHECK(canonical_less(cfg("+--"), cfg("-++")));
    CHECK_FALSE(canonical_less(cfg("-++"), cfg("+--")));
    CHECK(canonical_less(cfg("-+-"), cfg("+--")));
}

TEST_CASE("i_plus and i_minus") {
    const auto rho = perm({2, 3, 1});
    CHECK(i_plus(SpinConfig::alpha(3)) == 1u);
    CHECK_FALSE(i_plus(SpinConfig::omega(3)).has_value());
    CHECK(i_plus(cfg("+-+")) == 2u);

    CHECK_FALSE(i_minus(SpinConfig::alpha(3), rho).has_value());
    CHECK(i_minus(cfg("++-"), rho) == 2u);
    CHECK(i_minus(cfg("+-+"), rho) == 3u);
    CHECK_THROWS_AS(i_minus(cfg("++"), rho), Error);
}

TEST_CASE("U and D maps") {
    const auto rho = perm({2, 3, 1});
    CHECK(apply_U(SpinConfig::alpha(3), rho) == cfg("+--"));
    CHECK(apply_U(SpinConfig::omega(3), rho) == SpinConfig::omega(3));
    CHECK(apply_U(cfg("+-+"), rho) == SpinConfig::omega(3));

    CHECK(apply_D(SpinConfig::alpha(3), rho) == SpinConfig::alpha(3));
    CHECK(apply_D(SpinConfig::omega(3), rho) == cfg("+-+"));
    CHECK(apply_D(cfg("++-"), rho) == cfg("+--"));

    CHECK_THROWS_AS(apply_U(cfg("--"), rho), Error);
    CHECK_THROWS_AS(apply_D(cfg("----"), rho), Error);
}

TEST_CASE("map invariants over every configuration, N <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto configs = all_configs(n);
        for (const auto& rho : all_permutations(n)) {
            for (const auto& s : configs) {
                const auto up = apply_U(s, rho);
                const auto down = apply_D(s, rho);
                REQUIRE(i_plus(s).has_value() != s.is_omega());
                REQUIRE(i_minus(s, rho).has_value() != s.is_alpha());
                if (!s.is_omega()) REQUIRE(up.up_count() == s.up_count() + 1);
                if (!s.is_alpha()) REQUIRE(down.up_count() + 1 == s.up_count());
                REQUIRE(apply_U(s, rho) == up);

                SpinConfig u = s;
                SpinConfig d = s;
                for (std::size_t k = 0; k < n; ++k) {
                    u = apply_U(u, rho);
                    d = apply_D(d, rho);
                }
                REQUIRE(u.is_omega());
                REQUIRE(d.is_alpha());
                REQUIRE(apply_U(u, rho).is_omega());
            }
        }
    }
}
