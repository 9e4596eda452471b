#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coboundary/cartan.hpp"

namespace coboundary {

using Vertex = std::int32_t;
inline constexpr Vertex kNone = -1;

/// A finite crystal stored as a labeled graph. Vertices are 0..size()-1, each
/// carrying a weight; for every node i there are partial maps e_i and f_i.
///
/// Tensor products keep the factor sizes so that a vertex index can be read as
/// a mixed-radix tuple (first factor most significant). Nested products
/// therefore flatten without renumbering.
class CrystalGraph {
public:
    class Builder;

    const RootDatum& datum() const { return datum_; }
    std::size_t size() const { return weights_.size(); }
    int num_nodes() const { return datum_.num_nodes(); }

    const Weight& wt(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
    Vertex e(Vertex v, int i) const { return e_[slot(v, i)]; }
    Vertex f(Vertex v, int i) const { return f_[slot(v, i)]; }

    /// Length of the e_i (resp. f_i) string starting at v. Throws MalformedGraph on a cycle.
    int epsilon(Vertex v, int i) const;
    int phi(Vertex v, int i) const;

    const std::vector<std::size_t>& factor_sizes() const { return factor_sizes_; }
    std::size_t arity() const { return factor_sizes_.size(); }
    std::vector<Vertex> decode(Vertex v) const;
    Vertex encode(std::span<const Vertex> tuple) const;

    /// Optional display label (tableau text, tuple, ...). Empty when unset.
    const std::string& label(Vertex v) const;
    bool has_labels() const { return !labels_.empty(); }

    /// Edge assignments rejected while building (two different targets for
    /// the same (vertex, label) slot). Reported by validate().
    struct BuildIssue {
        Vertex vertex;
        int node;
        bool raising;
        Vertex kept;
        Vertex rejected;
    };
    const std::vector<BuildIssue>& build_issues() const { return issues_; }

    /// Same crystal with vertex k of the result equal to vertex order[k] of this one.
    CrystalGraph relabeled(std::span<const Vertex> order) const;

    friend bool operator==(const CrystalGraph& a, const CrystalGraph& b);

private:
    explicit CrystalGraph(RootDatum datum) : datum_(std::move(datum)) {}
    std::size_t slot(Vertex v, int i) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(num_nodes()) + static_cast<std::size_t>(i - 1);
    }

    RootDatum datum_;
    std::vector<Weight> weights_;
    std::vector<Vertex> e_;
    std::vector<Vertex> f_;
    std::vector<std::size_t> factor_sizes_;
    std::vector<std::string> labels_;
    std::vector<BuildIssue> issues_;
};

class CrystalGraph::Builder {
public:
    explicit Builder(RootDatum datum);

    Vertex add_vertex(Weight wt, std::string label = {});
    /// Records f_i(from) = to and e_i(to) = from.
    void add_edge(Vertex from, Vertex to, int i);
    /// One-sided assignments, for constructions that define e and f independently.
    void set_f(Vertex from, int i, Vertex to);
    void set_e(Vertex from, int i, Vertex to);
    void set_factor_sizes(std::vector<std::size_t> sizes);

    std::size_t size() const { return graph_.weights_.size(); }
    CrystalGraph build() &&;

private:
    void assign(std::vector<Vertex>& table, bool raising, Vertex from, int i, Vertex to);
    void check_vertex(Vertex v) const;

    CrystalGraph graph_;
};

/// Total map between vertex sets. Used for crystal morphisms as well as for
/// the set maps (xi, flip) that are not morphisms.
struct VertexMap {
    std::vector<Vertex> image;

    static VertexMap identity(std::size_t n);
    std::size_t size() const { return image.size(); }
    Vertex operator()(Vertex v) const { return image[static_cast<std::size_t>(v)]; }
    bool is_bijection(std::size_t target_size) const;
    VertexMap inverse() const;
    /// this, then next.
    VertexMap then(const VertexMap& next) const;

    friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

using CrystalMorphism = VertexMap;

/// True iff `map` commutes with wt, every e_i and every f_i, including the
/// cases where an operator kills a vertex.
bool is_morphism(const CrystalGraph& source, const CrystalGraph& target, const VertexMap& map);

struct Violation {
    enum class Kind {
        WeightLength,       // weight vector of the wrong length
        ConflictingEdge,    // two targets for one (vertex, label) slot
        InverseMismatch,    // b' = e_i b  iff  b = f_i b'
        WeightShift,        // wt(e_i b) = wt(b) + alpha_i
        StringLength,       // phi_i - epsilon_i = <wt, alpha_i^vee>
        Cycle,              // infinite e_i or f_i string
        ExtremalCount,      // component without a unique highest or lowest element
    };
    Kind kind;
    Vertex vertex;
    int node;  // 0 when not label specific
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Checks the crystal axioms and the normality conditions; collects every violation.
ValidationReport validate(const CrystalGraph& b);

/// Component index of each vertex (undirected connectivity over all labels),
/// numbered in order of first appearance.
std::vector<int> component_ids(const CrystalGraph& b, int* count = nullptr);

struct Component {
    CrystalGraph graph;
    std::vector<Vertex> to_parent;
};
std::vector<Component> components(const CrystalGraph& b);

/// Vertices killed by every e_i (resp. f_i).
std::vector<Vertex> raising_sinks(const CrystalGraph& b);
std::vector<Vertex> lowering_sinks(const CrystalGraph& b);

/// Unique highest (lowest) weight element of a connected crystal; NotNormalError otherwise.
Vertex highest_weight_element(const CrystalGraph& b);
Vertex lowest_weight_element(const CrystalGraph& b);

/// The unique isomorphism of connected crystals, or nullopt.
std::optional<CrystalMorphism> isomorphism(const CrystalGraph& b, const CrystalGraph& c);

CrystalGraph direct_sum(const CrystalGraph& a, const CrystalGraph& b);

/// Weights of all vertices, sorted.
std::vector<Weight> character(const CrystalGraph& b);

/// The inclusion B_{lambda+mu} -> A (x) B onto the component of (b_lambda, b_mu).
CrystalMorphism closed_family_inclusion(const CrystalGraph& b_lm, const CrystalGraph& a, const CrystalGraph& b);

/// Breadth-first order from each component's highest weight element, f-edges
/// explored smallest label first; components ordered by their highest element's index.
std::vector<Vertex> canonical_order(const CrystalGraph& b);
CrystalGraph canonical_form(const CrystalGraph& b);

}  // namespace coboundary
