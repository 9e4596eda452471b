#pragma once

#include <map>
#include <vector>

#include "coboundary/crystal.hpp"

namespace coboundary {

/// The Schützenberger involution of a normal crystal, computed on the graph:
/// on each component the lowest element goes to the highest one, and the
/// assignment is propagated by xi(e_{theta(i)} x) = f_i xi(x).
/// Throws NotNormalError if propagation conflicts or the twist relations fail.
VertexMap xi(const CrystalGraph& b);

/// Checks that `map` is an involution with e_i xi = xi f_{theta(i)},
/// f_i xi = xi e_{theta(i)} and wt xi = w0 wt, preserving components.
bool is_xi(const CrystalGraph& b, const VertexMap& map);

/// sigma_{A,B}(a, b) = xi_{B(x)A}(xi_B(b), xi_A(a)), as a map from A(x)B to B(x)A.
CrystalMorphism sigma(const CrystalGraph& a, const CrystalGraph& b);

/// The same commutor via flip . (xi_A (x) xi_B) . xi_{A(x)B}.
CrystalMorphism sigma_alt(const CrystalGraph& a, const CrystalGraph& b);

/// Positions hold factor labels (0-based): ordering[k] is the factor at position k+1.
using Ordering = std::vector<std::size_t>;

Ordering identity_ordering(std::size_t n);

/// A fixed list of crystals A_1..A_n with cached products and xi maps for
/// the orderings that have been requested. Not safe for concurrent use.
class TensorFamily {
public:
    explicit TensorFamily(std::vector<CrystalGraph> factors);

    std::size_t size() const { return factors_.size(); }
    const CrystalGraph& factor(std::size_t label) const { return factors_.at(label); }
    const std::vector<CrystalGraph>& factors() const { return factors_; }

    /// Sizes of the factors in the given order.
    std::vector<std::size_t> sizes(const Ordering& order) const;
    std::size_t product_size(const Ordering& order) const;

    const CrystalGraph& product(const Ordering& order);
    const VertexMap& xi(const Ordering& order);

private:
    void check(const Ordering& order) const;

    std::vector<CrystalGraph> factors_;
    std::map<Ordering, CrystalGraph> products_;
    std::map<Ordering, VertexMap> xis_;
};

/// A map between two iterated tensor products of the same family, the source
/// and target differing by the order of the factors. Vertex indices are
/// flattened tuples in the respective order.
struct TensorMap {
    Ordering source;
    Ordering target;
    VertexMap map;

    static TensorMap identity(TensorFamily& family, const Ordering& order);
    /// this, then next. Requires target == next.source.
    TensorMap then(const TensorMap& next) const;

    friend bool operator==(const TensorMap&, const TensorMap&) = default;
};

/// 1 (x) sigma_{A_p..A_r, A_{r+1}..A_q} (x) 1 applied to the product in `source` order.
/// Positions are 1-based with 1 <= p <= r < q <= n.
TensorMap sigma_block(TensorFamily& family, const Ordering& source, int p, int r, int q);

/// Interval reversal s_{p,q} by the closed formula
/// (.., a_p, .., a_q, ..) -> (.., xi(xi(a_q) .. xi(a_p)), ..). s_{p,p} is the identity.
TensorMap s_interval(TensorFamily& family, const Ordering& source, int p, int q);
TensorMap s_interval(TensorFamily& family, int p, int q);

/// s_{p,q} from the recursion s_{p,q} = sigma_{p,p,q} . s_{p+1,q}.
TensorMap s_interval_recursive(TensorFamily& family, const Ordering& source, int p, int q);

/// The permutation of positions effected by s_{p,q}.
Ordering reverse_interval(Ordering order, int p, int q);

}  // namespace coboundary
