#include "coboundary/bracketing.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "coboundary/errors.hpp"

namespace coboundary {

namespace {

bool laminar(const Interval& a, const Interval& b) { return a.disjoint(b) || a.contains(b) || b.contains(a); }

Interval mirror(const Interval& around, const Interval& x) { return {around.p + around.q - x.q, around.p + around.q - x.p}; }

}  // namespace

Bracketing::Bracketing(std::vector<int> ordering, std::vector<Interval> brackets) {
    const int n = static_cast<int>(ordering.size());
    if (n < 1) throw Error("bracketing needs at least one letter");
    std::vector<int> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < n; ++k)
        if (sorted[static_cast<std::size_t>(k)] != k + 1) throw Error("ordering is not a permutation of 1..n");
    std::sort(brackets.begin(), brackets.end());
    for (std::size_t k = 0; k < brackets.size(); ++k) {
        const Interval& b = brackets[k];
        if (!(1 <= b.p && b.p < b.q && b.q <= n)) throw Error("bracket must cover 2..n consecutive positions");
        if (k && brackets[k - 1] == b) throw Error("duplicate bracket");
        for (std::size_t j = 0; j < k; ++j)
            if (!laminar(brackets[j], b)) throw Error("brackets overlap without nesting");
    }
    Bracketing raw(Raw{}, std::move(ordering), std::move(brackets));
    *this = orbit(raw).front();
}

std::vector<Bracketing> Bracketing::orbit(const Bracketing& start) {
    std::set<Bracketing> seen{start};
    std::queue<Bracketing> todo;
    todo.push(start);
    while (!todo.empty()) {
        Bracketing cur = todo.front();
        todo.pop();
        for (const Interval& around : cur.brackets_) {
            Bracketing next = cur;
            std::reverse(next.ordering_.begin() + (around.p - 1), next.ordering_.begin() + around.q);
            for (Interval& b : next.brackets_)
                if (around.contains(b)) b = mirror(around, b);
            std::sort(next.brackets_.begin(), next.brackets_.end());
            if (seen.insert(next).second) todo.push(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Bracketing> Bracketing::representatives() const { return orbit(*this); }

Bracketing Bracketing::top(std::vector<int> ordering) { return Bracketing(std::move(ordering), {}); }

Bracketing Bracketing::parse(std::string_view text) {
    std::vector<int> ordering;
    std::vector<Interval> brackets;
    std::vector<int> open;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '(') {
            open.push_back(static_cast<int>(ordering.size()) + 1);
        } else if (ch == ')') {
            if (open.empty()) throw ParseError("unbalanced ')' in '" + std::string(text) + "'");
            brackets.push_back({open.back(), static_cast<int>(ordering.size())});
            open.pop_back();
        } else if (ch >= '1' && ch <= '9') {
            ordering.push_back(ch - '0');
        } else {
            throw ParseError("unexpected character in bracketing '" + std::string(text) + "'");
        }
    }
    if (!open.empty()) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
    try {
        return Bracketing(std::move(ordering), std::move(brackets));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
    }
}

std::string Bracketing::to_string() const {
    std::string out;
    for (int pos = 1; pos <= n(); ++pos) {
        // Outer brackets open first: longer intervals before shorter ones.
        std::vector<Interval> opening;
        for (const Interval& b : brackets_)
            if (b.p == pos) opening.push_back(b);
        out.append(opening.size(), '(');
        int letter = ordering_[static_cast<std::size_t>(pos - 1)];
        if (n() > 9 && pos > 1) out += ' ';
        out += std::to_string(letter);
        for (const Interval& b : brackets_)
            if (b.q == pos) out += ')';
    }
    return out;
}

std::vector<Bracketing> enumerate_cells(int n, int codim) {
    if (n < 1 || codim < 0) throw IndexError("enumerate_cells needs n >= 1 and codim >= 0");
    std::vector<Interval> intervals;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) intervals.push_back({p, q});

    std::vector<std::vector<Interval>> families;
    std::vector<Interval> chosen;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(chosen.size()) == codim) {
            families.push_back(chosen);
            return;
        }
        for (std::size_t k = from; k < intervals.size(); ++k) {
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const Interval& c) { return laminar(c, intervals[k]); });
            if (!ok) continue;
            chosen.push_back(intervals[k]);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);

    std::set<Bracketing> cells;
    std::vector<int> ordering(static_cast<std::size_t>(n));
    std::iota(ordering.begin(), ordering.end(), 1);
    do {
        for (const auto& family : families) cells.insert(Bracketing(ordering, family));
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    return {cells.begin(), cells.end()};
}

bool poset_leq(const Bracketing& a, const Bracketing& b) {
    if (a.n() != b.n()) throw IndexError("comparing bracketings on different letter counts");
    const auto reps_b = b.representatives();
    for (const Bracketing& ra : a.representatives()) {
        for (const Bracketing& rb : reps_b) {
            if (ra.ordering() != rb.ordering()) continue;
            bool subset = std::all_of(rb.brackets().begin(), rb.brackets().end(), [&](const Interval& x) {
                return std::find(ra.brackets().begin(), ra.brackets().end(), x) != ra.brackets().end();
            });
            if (subset) return true;
        }
    }
    return false;
}

namespace {

void check_top(const Bracketing& top, int p, int q) {
    if (top.codim() != 0) throw IndexError("facets are taken of top-dimensional cells");
    if (!(1 <= p && p < q && q <= top.n())) throw IndexError("facet (p,q) needs 1 <= p < q <= n");
}

}  // namespace

Bracketing facet_neighbor(const Bracketing& top, int p, int q) {
    check_top(top, p, q);
    std::vector<int> ordering = top.ordering();
    std::reverse(ordering.begin() + (p - 1), ordering.begin() + q);
    return Bracketing::top(std::move(ordering));
}

Bracketing facet(const Bracketing& top, int p, int q) {
    check_top(top, p, q);
    return Bracketing(top.ordering(), {{p, q}});
}

PathResult path_word(const std::vector<Interval>& crossings, const Bracketing& start) {
    Bracketing cell = start;
    for (const Interval& s : crossings) cell = facet_neighbor(cell, s.p, s.q);
    return {CactusWord(start.n(), crossings), cell};
}

std::vector<LocalRelation> codim2_relations(int n) {
    std::vector<LocalRelation> out;
    for (const Bracketing& cell : enumerate_cells(n, 2)) {
        for (const Bracketing& rep : cell.representatives()) {
            const Interval x = rep.brackets()[0], y = rep.brackets()[1];
            const Bracketing start = Bracketing::top(rep.ordering());
            std::vector<Interval> first, second;
            if (x.disjoint(y)) {
                first = {x, y};
                second = {y, x};
            } else {
                const Interval outer = x.contains(y) ? x : y;
                const Interval inner = x.contains(y) ? y : x;
                first = {outer, mirror(outer, inner)};
                second = {inner, outer};
            }
            out.push_back({cell, start, CactusWord(n, first), CactusWord(n, second)});
        }
    }
    return out;
}

}  // namespace coboundary
