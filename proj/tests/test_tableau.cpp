#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coboundary/errors.hpp"
#include "coboundary/tableau.hpp"
#include "oracles/oracles.hpp"

using namespace coboundary;

namespace {

Tableau T(const char* s) { return Tableau::parse(s); }

std::vector<Shape> shapes_up_to(int size) {
    std::vector<Shape> out;
    std::function<void(std::vector<int>, int, int)> rec = [&](std::vector<int> parts, int left, int cap) {
        out.emplace_back(parts);
        for (int x = 1; x <= std::min(left, cap); ++x) {
            auto next = parts;
            next.push_back(x);
            rec(next, left - x, x);
        }
    };
    rec({}, size, size);
    return out;
}

}  // namespace

TEST_CASE("shapes") {
    CHECK(Shape::parse("2,1").parts == std::vector<int>{2, 1});
    CHECK(Shape(std::vector<int>{2, 1, 0, 0}).parts == std::vector<int>{2, 1});
    CHECK_THROWS_AS(Shape::parse("1,2"), ParseError);
    CHECK_THROWS_AS(Shape::parse("a"), ParseError);
    CHECK(Shape::parse("").size() == 0);
}

TEST_CASE("weights") {
    CHECK(weight(T("1"), 2) == Weight{1, 0});
    CHECK(weight(T("1,2"), 2) == Weight{1, 1});
    CHECK(weight(T("1,1/2"), 2) == Weight{2, 1});
}

TEST_CASE("Kashiwara operators") {
    CHECK(*f_op(T("1,1"), 1, 2) == T("1,2"));
    CHECK(*e_op(T("2"), 1, 2) == T("1"));
    CHECK(*f_op(T("1,2"), 1, 2) == T("2,2"));
    CHECK_FALSE(f_op(T("2,2"), 1, 2));
    CHECK_FALSE(f_op(T("1/2"), 1, 2));
    CHECK_THROWS_AS(f_op(T("1"), 2, 2), IndexError);
    CHECK_THROWS_AS(e_op(T("1"), 0, 2), IndexError);
}

TEST_CASE("operators stay semistandard and are mutually inverse") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& shape : shapes_up_to(4))
            for (const auto& t : oracle::enumerate_ssyt(shape, n))
                for (int i = 1; i < n; ++i) {
                    if (auto f = f_op(t, i, n)) {
                        CHECK(f->is_semistandard(n));
                        CHECK(*e_op(*f, i, n) == t);
                        CHECK(weight(*f, n) == weight(t, n) - RootDatum(Family::GL, n).simple_root(i));
                    }
                    if (auto e = e_op(t, i, n)) {
                        CHECK(e->is_semistandard(n));
                        CHECK(*f_op(*e, i, n) == t);
                    }
                }
}

TEST_CASE("generation") {
    CHECK(generate_B_lambda(Shape{1}, 2).size() == 2);
    CrystalGraph b = generate_B_lambda(Shape{2}, 2);
    REQUIRE(b.size() == 3);
    CHECK(b.label(0) == "1,1");
    CHECK(b.label(b.f(0, 1)) == "1,2");
    CHECK(b.label(b.f(b.f(0, 1), 1)) == "2,2");
    CHECK(generate_B_lambda(Shape{1, 1}, 3).size() == 3);
    CHECK_THROWS_AS(generate_B_lambda(Shape{1, 1, 1}, 2), Error);
}

TEST_CASE("generation equals direct enumeration") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : shapes_up_to(5)) {
            if (shape.rows() > n) continue;
            CrystalGraph b = generate_B_lambda(shape, n);
            std::vector<Tableau> got;
            for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) got.push_back(Tableau::parse(b.label(v)));
            std::sort(got.begin(), got.end());
            CHECK(got == oracle::enumerate_ssyt(shape, n));
            CHECK(validate(b).ok());
        }
}

TEST_CASE("evacuation") {
    CHECK(evacuation(T("1"), 2) == T("2"));
    CHECK(evacuation(T("1,2"), 2) == T("1,2"));
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : shapes_up_to(5)) {
            if (shape.rows() > n) continue;
            Tableau high = highest_tableau(shape);
            Tableau ev = evacuation(high, n);
            Weight w = weight(high, n);
            std::reverse(w.coords.begin(), w.coords.end());
            CHECK(weight(ev, n) == w);
            for (const auto& t : oracle::enumerate_ssyt(shape, n)) {
                Tableau e = evacuation(t, n);
                CHECK(e.is_semistandard(n));
                CHECK(evacuation(e, n) == t);
                Weight wt = weight(t, n);
                std::reverse(wt.coords.begin(), wt.coords.end());
                CHECK(weight(e, n) == wt);
                bool rectangle = std::all_of(shape.parts.begin(), shape.parts.end(), [&](int p) { return p == shape.parts.front(); });
                if (rectangle) CHECK(e == rectangle_evacuation(t, n));
            }
        }
}

TEST_CASE("Bender-Knuth involutions") {
    for (const auto& t : oracle::enumerate_ssyt(Shape{3, 2}, 3))
        for (int i = 1; i <= 2; ++i) {
            Tableau b = bender_knuth(t, i);
            CHECK(b.is_semistandard(3));
            CHECK(bender_knuth(b, i) == t);
            Weight w = weight(t, 3);
            std::swap(w.coords[static_cast<std::size_t>(i - 1)], w.coords[static_cast<std::size_t>(i)]);
            CHECK(weight(b, 3) == w);
        }
}
