#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coboundary/commutor.hpp"

namespace coboundary {

/// Generator s_{p,q} of J_n, 1 <= p < q <= n.
struct Interval {
    int p = 1;
    int q = 2;

    bool disjoint(const Interval& o) const { return q < o.p || o.q < p; }
    bool contains(const Interval& o) const { return p <= o.p && o.q <= q; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Permutation of {1..n}; images[k-1] is the image of k.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    /// The reversal of positions p..q.
    static Permutation reversal(int n, Interval s);

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int k) const { return images.at(static_cast<std::size_t>(k - 1)); }
    bool valid() const;
    /// (this o other)(k) = this(other(k)).
    Permutation after(const Permutation& other) const;
    Permutation inverse() const;
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Word in the generators of the cactus group J_n.
///
/// Letters are stored in the order in which they act: the word [a, b] acting
/// on a tensor product reverses interval a first, then interval b. With this
/// orientation tau(w') o tau(w) = tau(w w').
class CactusWord {
public:
    explicit CactusWord(int n, std::vector<Interval> letters = {});

    /// "s(1,3)*s(2,3)"; "1" or "" is the empty word.
    static CactusWord parse(std::string_view text, int n);

    int arity() const { return n_; }
    const std::vector<Interval>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    CactusWord operator*(const CactusWord& other) const;
    /// Letters reversed; every generator is an involution.
    CactusWord inverse() const;
    std::string to_string() const;

    friend bool operator==(const CactusWord&, const CactusWord&) = default;

private:
    int n_;
    std::vector<Interval> letters_;
};

/// rho-hat: position k of the target holds factor to_permutation(w)(k).
/// Equal to s-hat_{l1} o ... o s-hat_{lm} for the letters l1..lm.
Permutation to_permutation(const CactusWord& w);

/// Applies one defining relation to the letters at positions `position`,
/// `position`+1 (1-based): deletes s s, swaps disjoint letters, and moves a
/// contained letter across its container (s_{p,q} s_{k,l} <-> s_{m,n} s_{p,q}).
std::optional<CactusWord> relation_rewrite(const CactusWord& w, std::size_t position);

/// Every defining relation of J_n written as a word equal to 1.
std::vector<CactusWord> relation_words(int n);

/// tau(w; A_1..A_n): composite of interval reversals, from the product in
/// identity order to the product in to_permutation(w) order.
TensorMap act(const CactusWord& w, TensorFamily& family);
TensorMap act(const CactusWord& w, TensorFamily& family, const Ordering& source);

/// Sound but incomplete equality test: same image in S_n and the same action
/// on every probe family. A false result proves the words differ; a true
/// result is evidence only.
bool words_equal_semantically(const CactusWord& a, const CactusWord& b,
                              std::span<const std::vector<CrystalGraph>> probes);

/// Arrow (rho; pi) of the action groupoid. pi sends a marked point to its
/// position on the curve; following rho, label l ends at position
/// target()(l) = to_permutation(rho)^{-1}(pi(l)).
struct GroupoidArrow {
    CactusWord rho;
    Permutation pi;

    Permutation target() const;
};

/// Operad composition of permutations: the block pi' replaces the point i of pi.
Permutation operad_compose(const Permutation& pi, const Permutation& inner, int i);

/// (a) o_i (b): the composite arrow over n+k-1 points. Each letter of a is
/// composed with the identity of b and each letter of b with the identity
/// at a's target, by the generator formulas.
GroupoidArrow operad_compose(const GroupoidArrow& a, const GroupoidArrow& b, int i);

/// Compares tau(a; .., tau(b; block), ..) with tau(a o_i b; all factors) on
/// the given factors (n+k-1 crystals); the block starts at position a.pi(i).
bool operad_action_compatibility(const GroupoidArrow& a, const GroupoidArrow& b, int i,
                                 const std::vector<CrystalGraph>& factors);

}  // namespace coboundary
