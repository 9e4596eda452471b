#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coboundary/cartan.hpp"
#include "coboundary/crystal.hpp"

namespace coboundary {

/// Partition with trailing zeros removed.
struct Shape {
    std::vector<int> parts;

    Shape() = default;
    explicit Shape(std::vector<int> p);
    Shape(std::initializer_list<int> p) : Shape(std::vector<int>(p)) {}

    /// "2,1" -> (2,1). The empty string is the empty partition.
    static Shape parse(std::string_view text);

    int rows() const { return static_cast<int>(parts.size()); }
    int size() const;
    /// Weight (parts padded to length n) in epsilon-coordinates.
    Weight as_weight(int n) const;

    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Semistandard Young tableau in English notation: rows weakly increase,
/// columns strictly increase.
struct Tableau {
    std::vector<std::vector<int>> rows;

    /// "1,1/2": rows separated by '/', entries by ','.
    static Tableau parse(std::string_view text);
    std::string to_string() const;

    Shape shape() const;
    bool is_semistandard(int n) const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// Row k filled with k.
Tableau highest_tableau(const Shape& shape);

/// Number of entries equal to k, for k = 1..n.
Weight weight(const Tableau& t, int n);

/// Positions (row, column) in column reading order: columns left to right,
/// each read bottom to top.
std::vector<std::pair<int, int>> column_reading_positions(const Tableau& t);
std::vector<int> column_reading_word(const Tableau& t);

/// Kashiwara operators by the signature rule on the column reading word:
/// pairs "i+1 ... i" cancel, leaving i^a (i+1)^b. f_i raises the last
/// unmatched i, e_i lowers the first unmatched i+1. nullopt when no such letter.
std::optional<Tableau> f_op(const Tableau& t, int i, int n);
std::optional<Tableau> e_op(const Tableau& t, int i, int n);

/// B_lambda for gl_n: closure of the highest weight tableau under the f_i,
/// vertices in breadth-first order (smallest label first), labeled by tableau text.
CrystalGraph generate_B_lambda(const Shape& shape, int n);

/// Bender-Knuth involution exchanging the free i's and i+1's in every row.
Tableau bender_knuth(const Tableau& t, int i);

/// Schützenberger evacuation with entries bounded by n, as the product of
/// partial promotions t_1 (t_2 t_1) ... (t_{n-1} ... t_1).
Tableau evacuation(const Tableau& t, int n);

/// Evacuation of a rectangular tableau: rotate by 180 degrees and replace k by n+1-k.
Tableau rectangle_evacuation(const Tableau& t, int n);

}  // namespace coboundary
