#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coboundary/cartan.hpp"
#include "coboundary/errors.hpp"
#include "oracles/oracles.hpp"

using namespace coboundary;

namespace {

std::vector<RootDatum> all_types() {
    std::vector<RootDatum> out;
    for (int r = 1; r <= 6; ++r) out.emplace_back(Family::A, r);
    for (int r = 2; r <= 5; ++r) out.emplace_back(Family::B, r);
    for (int r = 2; r <= 5; ++r) out.emplace_back(Family::C, r);
    for (int r = 4; r <= 6; ++r) out.emplace_back(Family::D, r);
    out.emplace_back(Family::E6, 6);
    out.emplace_back(Family::E7, 7);
    out.emplace_back(Family::E8, 8);
    out.emplace_back(Family::F4, 4);
    out.emplace_back(Family::G2, 2);
    for (int n = 1; n <= 5; ++n) out.emplace_back(Family::GL, n);
    return out;
}

Weight random_weight(const RootDatum& d, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<int> c(d.coord_dim());
    for (int& x : c) x = dist(rng);
    return Weight(c);
}

}  // namespace

TEST_CASE("pairing examples") {
    RootDatum gl3(Family::GL, 3);
    CHECK(gl3.pairing({2, 1, 0}, 1) == 1);
    CHECK(gl3.pairing({1, 1, 0}, 1) == 0);
    RootDatum a2(Family::A, 2);
    CHECK(a2.pairing({1, 0}, 2) == 0);
    CHECK_THROWS_AS(a2.pairing({1, 0}, 3), IndexError);
}

TEST_CASE("simple reflection examples") {
    RootDatum gl2(Family::GL, 2);
    CHECK(gl2.simple_reflection({1, 0}, 1) == Weight{0, 1});
    RootDatum a2(Family::A, 2);
    CHECK(a2.simple_reflection({1, 0}, 1) == Weight{-1, 1});
    CHECK(a2.simple_reflection({0, 3}, 1) == Weight{0, 3});
}

TEST_CASE("longest element words") {
    CHECK(RootDatum(Family::A, 1).longest_element_word() == std::vector<int>{1});
    CHECK(RootDatum(Family::A, 2).longest_element_word() == std::vector<int>{1, 2, 1});
    CHECK(RootDatum(Family::GL, 3).longest_element_word().size() == 3);
    for (const auto& d : all_types()) {
        CAPTURE(d.name());
        if (d.num_nodes() == 0) continue;
        CHECK(static_cast<int>(d.longest_element_word().size()) == oracle::positive_root_count(d.cartan_matrix()));
    }
    for (int n = 1; n <= 5; ++n) CHECK(RootDatum(Family::GL, n).longest_element_word().size() == static_cast<std::size_t>(n * (n - 1) / 2));
}

TEST_CASE("w0 action") {
    CHECK(RootDatum(Family::GL, 3).w0_action({2, 1, 0}) == Weight{0, 1, 2});
    CHECK(RootDatum(Family::A, 1).w0_action({1}) == Weight{-1});
    CHECK(RootDatum(Family::GL, 3).w0_action({2, 2, 2}) == Weight{2, 2, 2});
    for (const auto& d : all_types()) {
        CAPTURE(d.name());
        CHECK(d.w0_action(d.w0_action(d.rho())) == d.rho());
    }
}

TEST_CASE("w0 sends rho to minus rho") {
    for (const auto& d : all_types()) {
        if (d.family() == Family::GL) continue;
        CAPTURE(d.name());
        CHECK(d.w0_action(d.rho()) == -d.rho());
    }
}

TEST_CASE("theta") {
    RootDatum gl3(Family::GL, 3);
    CHECK(gl3.theta(1) == 2);
    CHECK(gl3.theta(2) == 1);
    CHECK(RootDatum(Family::A, 1).theta(1) == 1);
    RootDatum d4(Family::D, 4);
    for (int i = 1; i <= 4; ++i) CHECK(d4.theta(i) == i);
    RootDatum d5(Family::D, 5);
    CHECK(d5.theta(4) == 5);
    CHECK(RootDatum(Family::E6, 6).theta(1) == 6);
    CHECK(RootDatum(Family::E7, 7).theta(1) == 1);
    for (int n = 2; n <= 6; ++n) {
        RootDatum gl(Family::GL, n);
        for (int i = 1; i < n; ++i) CHECK(gl.theta(i) == n - i);
    }
}

TEST_CASE("dominance") {
    RootDatum gl3(Family::GL, 3);
    CHECK(gl3.dominant({2, 1, 0}));
    CHECK_FALSE(gl3.dominant({0, 1, 2}));
    CHECK(gl3.dominant(gl3.zero()));
}

TEST_CASE("reflection and w0 properties on random weights") {
    std::mt19937 rng(7);
    for (const auto& d : all_types()) {
        CAPTURE(d.name());
        for (int t = 0; t < 20; ++t) {
            Weight l = random_weight(d, rng);
            for (int i = 1; i <= d.num_nodes(); ++i) {
                CHECK(d.simple_reflection(d.simple_reflection(l, i), i) == l);
                CHECK(d.pairing(d.w0_action(l), d.theta(i)) == -d.pairing(l, i));
                CHECK(d.theta(d.theta(i)) == i);
            }
            CHECK(d.w0_action(d.w0_action(l)) == l);
        }
    }
}

TEST_CASE("Bourbaki conventions") {
    RootDatum b3(Family::B, 3), c3(Family::C, 3), g2(Family::G2, 2), f4(Family::F4, 4);
    CHECK(b3.cartan(3, 2) == -2);
    CHECK(c3.cartan(2, 3) == -2);
    CHECK(f4.cartan(3, 2) == -2);
    CHECK(g2.cartan_matrix() == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
}

TEST_CASE("finite type check") {
    CHECK(is_finite_type({{2, -1}, {-1, 2}}));
    CHECK_FALSE(is_finite_type({{2, -2}, {-2, 2}}));                      // affine A1
    CHECK_FALSE(is_finite_type({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));  // affine A2
    CHECK_FALSE(is_finite_type({{2, -1}, {0, 2}}));                        // zero pattern not symmetric
    CHECK_THROWS_AS(RootDatum({{2, -2}, {-2, 2}}), Error);
    RootDatum custom({{2, -1}, {-1, 2}});
    CHECK(custom.longest_element_word().size() == 3);
}

TEST_CASE("parsing type names") {
    CHECK(RootDatum::parse("A2") == RootDatum(Family::A, 2));
    CHECK(RootDatum::parse("GL3") == RootDatum(Family::GL, 3));
    CHECK(RootDatum::parse("E8").num_nodes() == 8);
    CHECK(RootDatum::parse("GL3").name() == "GL3");
    CHECK_THROWS_AS(RootDatum::parse("Q7"), ParseError);
    CHECK_THROWS_AS(RootDatum::parse("A0"), ParseError);
    CHECK_THROWS_AS(RootDatum::parse("E9"), ParseError);
}
