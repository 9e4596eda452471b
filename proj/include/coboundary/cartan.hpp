#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace coboundary {

/// Integral weight. For GL data the coordinates are epsilon-coordinates
/// (length n); for every other type they are fundamental-weight coordinates,
/// i.e. coords[i-1] = <lambda, alpha_i^vee>.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    Weight(std::initializer_list<int> c) : coords(c) {}

    std::size_t size() const { return coords.size(); }
    int operator[](std::size_t k) const { return coords[k]; }

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight operator-() const;
    Weight scaled(int k) const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    /// "(2,1,0)"
    std::string to_string() const;
};

enum class Family { A, B, C, D, E6, E7, E8, F4, G2, GL, Custom };

enum class CoordinateMode { Epsilon, Fundamental };

/// Cartan matrix and weight coordinate system of a finite-type reductive Lie
/// algebra. Nodes are numbered 1..num_nodes() following Bourbaki.
///
/// cartan(i, j) = <alpha_j, alpha_i^vee>. For GL_n the "rank" is n (the
/// coordinate dimension) and the Dynkin diagram is A_{n-1}.
class RootDatum {
public:
    /// Builds the datum of the named family. `rank` is the Bourbaki rank, or n for GL_n.
    RootDatum(Family family, int rank);

    /// Custom Cartan matrix in fundamental coordinates; rejected unless of finite type.
    explicit RootDatum(std::vector<std::vector<int>> cartan_matrix);

    /// Parses "A2", "B3", "E6", "G2", "GL3", ...
    static RootDatum parse(std::string_view name);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    int num_nodes() const { return static_cast<int>(matrix_.size()); }
    std::size_t coord_dim() const;
    CoordinateMode coordinate_mode() const {
        return family_ == Family::GL ? CoordinateMode::Epsilon : CoordinateMode::Fundamental;
    }
    int cartan(int i, int j) const;
    const std::vector<std::vector<int>>& cartan_matrix() const { return matrix_; }

    /// "GL3", "A2", ...
    std::string name() const;

    Weight zero() const { return Weight(std::vector<int>(coord_dim(), 0)); }
    /// Simple root alpha_i in this datum's coordinates.
    Weight simple_root(int i) const;
    /// Weight with every pairing equal to 1.
    Weight rho() const;

    int pairing(const Weight& lambda, int i) const;
    Weight simple_reflection(const Weight& lambda, int i) const;
    bool dominant(const Weight& lambda) const;

    /// Reduced word of w0 found by greedy descent from rho, smallest index first.
    const std::vector<int>& longest_element_word() const { return w0_word_; }
    Weight w0_action(const Weight& lambda) const;
    /// Dynkin involution: alpha_{theta(i)} = -w0 . alpha_i.
    int theta(int i) const;

    friend bool operator==(const RootDatum& a, const RootDatum& b) {
        return a.family_ == b.family_ && a.rank_ == b.rank_ && a.matrix_ == b.matrix_;
    }

private:
    void check_node(int i) const;
    void check_weight(const Weight& lambda) const;
    void finish();

    Family family_;
    int rank_;
    std::vector<std::vector<int>> matrix_;
    std::vector<int> w0_word_;
    std::vector<int> theta_;
};

/// True iff `m` is a generalized Cartan matrix of finite type.
bool is_finite_type(const std::vector<std::vector<int>>& m);

}  // namespace coboundary

template <>
struct std::hash<coboundary::Weight> {
    std::size_t operator()(const coboundary::Weight& w) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int c : w.coords) h = (h ^ static_cast<std::size_t>(c + 0x5bd1e995)) * 0x100000001b3ULL;
        return h;
    }
};
