#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "coboundary/cactus.hpp"

namespace coboundary {

/// Ordered partial bracketing of 1..n up to reversal inside brackets: a cell
/// of the moduli space of n-fruit cacti.
///
/// `ordering[k-1]` is the letter at position k; brackets are position
/// intervals of length >= 2, pairwise nested or disjoint. Instances are
/// always the canonical (lexicographically least) representative of their class.
class Bracketing {
public:
    /// Validates and canonicalizes.
    Bracketing(std::vector<int> ordering, std::vector<Interval> brackets);

    /// "((12)3)" or "2(14)3"; letters are single digits, so n <= 9.
    static Bracketing parse(std::string_view text);
    /// Top cell of an ordering, e.g. "1324".
    static Bracketing top(std::vector<int> ordering);

    int n() const { return static_cast<int>(ordering_.size()); }
    int codim() const { return static_cast<int>(brackets_.size()); }
    const std::vector<int>& ordering() const { return ordering_; }
    const std::vector<Interval>& brackets() const { return brackets_; }
    std::string to_string() const;

    /// Every ordered partial bracketing in the class, canonical one first.
    std::vector<Bracketing> representatives() const;

    friend bool operator==(const Bracketing&, const Bracketing&) = default;
    friend auto operator<=>(const Bracketing&, const Bracketing&) = default;

private:
    struct Raw {};
    Bracketing(Raw, std::vector<int> ordering, std::vector<Interval> brackets)
        : ordering_(std::move(ordering)), brackets_(std::move(brackets)) {}
    static std::vector<Bracketing> orbit(const Bracketing& start);

    std::vector<int> ordering_;
    std::vector<Interval> brackets_;
};

/// All cells with exactly `codim` brackets, sorted.
std::vector<Bracketing> enumerate_cells(int n, int codim);

/// a <= b in the closure order: some representative of a is obtained from
/// some representative of b by inserting brackets.
bool poset_leq(const Bracketing& a, const Bracketing& b);

/// The top cell across the facet (p, q): positions p..q reversed.
Bracketing facet_neighbor(const Bracketing& top, int p, int q);

/// The facet (p, q) of a top cell: a single bracket around positions p..q.
Bracketing facet(const Bracketing& top, int p, int q);

struct PathResult {
    CactusWord word;
    Bracketing end;
};

/// Crossing the facets in order from `start` gives the word of the crossings
/// and the final top cell. If start has ordering g, the end has ordering
/// g o to_permutation(word).
PathResult path_word(const std::vector<Interval>& crossings, const Bracketing& start);

/// The two ways around a codimension-2 cell from one of its adjacent top cells.
struct LocalRelation {
    Bracketing cell;
    Bracketing start;
    CactusWord first;
    CactusWord second;

    /// first followed by the inverse of second.
    CactusWord loop() const { return first * second.inverse(); }
};

std::vector<LocalRelation> codim2_relations(int n);

}  // namespace coboundary
