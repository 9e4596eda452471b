#include "coboundary/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "coboundary/errors.hpp"
#include "coboundary/tensor.hpp"

namespace coboundary {

// ---------------------------------------------------------------------------
// CrystalGraph

int CrystalGraph::epsilon(Vertex v, int i) const {
    int n = 0;
    for (Vertex w = e(v, i); w != kNone; w = e(w, i)) {
        if (++n > static_cast<int>(size())) throw MalformedGraph("e_" + std::to_string(i) + " string does not terminate");
    }
    return n;
}

int CrystalGraph::phi(Vertex v, int i) const {
    int n = 0;
    for (Vertex w = f(v, i); w != kNone; w = f(w, i)) {
        if (++n > static_cast<int>(size())) throw MalformedGraph("f_" + std::to_string(i) + " string does not terminate");
    }
    return n;
}

std::vector<Vertex> CrystalGraph::decode(Vertex v) const {
    std::vector<Vertex> tuple(factor_sizes_.size());
    auto rest = static_cast<std::size_t>(v);
    for (std::size_t k = factor_sizes_.size(); k-- > 0;) {
        tuple[k] = static_cast<Vertex>(rest % factor_sizes_[k]);
        rest /= factor_sizes_[k];
    }
    return tuple;
}

Vertex CrystalGraph::encode(std::span<const Vertex> tuple) const {
    if (tuple.size() != factor_sizes_.size()) throw IndexError("tuple arity mismatch");
    std::size_t v = 0;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (tuple[k] < 0 || static_cast<std::size_t>(tuple[k]) >= factor_sizes_[k])
            throw IndexError("tuple entry out of range");
        v = v * factor_sizes_[k] + static_cast<std::size_t>(tuple[k]);
    }
    return static_cast<Vertex>(v);
}

const std::string& CrystalGraph::label(Vertex v) const {
    static const std::string empty;
    return labels_.empty() ? empty : labels_[static_cast<std::size_t>(v)];
}

CrystalGraph CrystalGraph::relabeled(std::span<const Vertex> order) const {
    if (order.size() != size()) throw IndexError("relabeling has wrong length");
    std::vector<Vertex> position(size(), kNone);
    for (std::size_t k = 0; k < order.size(); ++k) position[static_cast<std::size_t>(order[k])] = static_cast<Vertex>(k);
    if (std::find(position.begin(), position.end(), kNone) != position.end())
        throw IndexError("relabeling is not a permutation");
    auto move = [&](Vertex w) { return w == kNone ? kNone : position[static_cast<std::size_t>(w)]; };

    CrystalGraph out(datum_);
    out.factor_sizes_ = {size()};
    out.weights_.reserve(size());
    out.e_.assign(e_.size(), kNone);
    out.f_.assign(f_.size(), kNone);
    for (std::size_t k = 0; k < order.size(); ++k) {
        Vertex old = order[k];
        out.weights_.push_back(wt(old));
        if (!labels_.empty()) out.labels_.push_back(label(old));
        for (int i = 1; i <= num_nodes(); ++i) {
            out.e_[out.slot(static_cast<Vertex>(k), i)] = move(e(old, i));
            out.f_[out.slot(static_cast<Vertex>(k), i)] = move(f(old, i));
        }
    }
    for (BuildIssue issue : issues_) {
        issue.vertex = move(issue.vertex);
        issue.kept = move(issue.kept);
        issue.rejected = move(issue.rejected);
        out.issues_.push_back(issue);
    }
    return out;
}

bool operator==(const CrystalGraph& a, const CrystalGraph& b) {
    return a.datum_ == b.datum_ && a.weights_ == b.weights_ && a.e_ == b.e_ && a.f_ == b.f_;
}

// ---------------------------------------------------------------------------
// Builder

CrystalGraph::Builder::Builder(RootDatum datum) : graph_(std::move(datum)) {}

Vertex CrystalGraph::Builder::add_vertex(Weight wt, std::string label) {
    auto v = static_cast<Vertex>(graph_.weights_.size());
    graph_.weights_.push_back(std::move(wt));
    const auto nodes = static_cast<std::size_t>(graph_.num_nodes());
    graph_.e_.resize(graph_.e_.size() + nodes, kNone);
    graph_.f_.resize(graph_.f_.size() + nodes, kNone);
    graph_.labels_.push_back(std::move(label));
    return v;
}

void CrystalGraph::Builder::check_vertex(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= size())
        throw IndexError("vertex " + std::to_string(v) + " out of range");
}

void CrystalGraph::Builder::assign(std::vector<Vertex>& table, bool raising, Vertex from, int i, Vertex to) {
    check_vertex(from);
    if (to != kNone) check_vertex(to);
    if (i < 1 || i > graph_.num_nodes()) throw IndexError("edge label " + std::to_string(i) + " out of range");
    Vertex& cell = table[graph_.slot(from, i)];
    if (cell != kNone && cell != to) {
        graph_.issues_.push_back({from, i, raising, cell, to});
        return;
    }
    cell = to;
}

void CrystalGraph::Builder::add_edge(Vertex from, Vertex to, int i) {
    assign(graph_.f_, false, from, i, to);
    assign(graph_.e_, true, to, i, from);
}

void CrystalGraph::Builder::set_f(Vertex from, int i, Vertex to) { assign(graph_.f_, false, from, i, to); }
void CrystalGraph::Builder::set_e(Vertex from, int i, Vertex to) { assign(graph_.e_, true, from, i, to); }

void CrystalGraph::Builder::set_factor_sizes(std::vector<std::size_t> sizes) {
    std::size_t product = 1;
    for (std::size_t s : sizes) product *= s;
    if (product != size()) throw IndexError("factor sizes do not multiply to the vertex count");
    graph_.factor_sizes_ = std::move(sizes);
}

CrystalGraph CrystalGraph::Builder::build() && {
    if (graph_.factor_sizes_.empty()) graph_.factor_sizes_ = {size()};
    auto& labels = graph_.labels_;
    if (std::all_of(labels.begin(), labels.end(), [](const std::string& l) { return l.empty(); })) labels.clear();
    return std::move(graph_);
}

// ---------------------------------------------------------------------------
// VertexMap

VertexMap VertexMap::identity(std::size_t n) {
    VertexMap m;
    m.image.resize(n);
    std::iota(m.image.begin(), m.image.end(), 0);
    return m;
}

bool VertexMap::is_bijection(std::size_t target_size) const {
    if (image.size() != target_size) return false;
    std::vector<char> hit(target_size, 0);
    for (Vertex v : image) {
        if (v < 0 || static_cast<std::size_t>(v) >= target_size || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

VertexMap VertexMap::inverse() const {
    if (!is_bijection(image.size())) throw IndexError("map is not invertible");
    VertexMap inv;
    inv.image.resize(image.size());
    for (std::size_t k = 0; k < image.size(); ++k) inv.image[static_cast<std::size_t>(image[k])] = static_cast<Vertex>(k);
    return inv;
}

VertexMap VertexMap::then(const VertexMap& next) const {
    VertexMap out;
    out.image.reserve(image.size());
    for (Vertex v : image) {
        if (v < 0 || static_cast<std::size_t>(v) >= next.size()) throw IndexError("composition domain mismatch");
        out.image.push_back(next(v));
    }
    return out;
}

bool is_morphism(const CrystalGraph& source, const CrystalGraph& target, const VertexMap& map) {
    if (map.size() != source.size() || !(source.datum() == target.datum())) return false;
    for (Vertex v = 0; v < static_cast<Vertex>(source.size()); ++v) {
        Vertex w = map(v);
        if (w < 0 || static_cast<std::size_t>(w) >= target.size()) return false;
        if (source.wt(v) != target.wt(w)) return false;
        for (int i = 1; i <= source.num_nodes(); ++i) {
            Vertex ev = source.e(v, i), fv = source.f(v, i);
            if ((ev == kNone ? kNone : map(ev)) != target.e(w, i)) return false;
            if ((fv == kNone ? kNone : map(fv)) != target.f(w, i)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Validation

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const Violation& v : violations) {
        os << "vertex " << v.vertex;
        if (v.node) os << " label " << v.node;
        os << ": " << v.message << '\n';
    }
    return os.str();
}

namespace {

// String length along one label without throwing; -1 on a cycle.
int walk(const CrystalGraph& b, Vertex v, int i, bool raising) {
    int n = 0;
    for (Vertex w = raising ? b.e(v, i) : b.f(v, i); w != kNone; w = raising ? b.e(w, i) : b.f(w, i))
        if (++n > static_cast<int>(b.size())) return -1;
    return n;
}

}  // namespace

ValidationReport validate(const CrystalGraph& b) {
    ValidationReport report;
    auto add = [&](Violation::Kind kind, Vertex v, int i, std::string msg) {
        report.violations.push_back({kind, v, i, std::move(msg)});
    };
    const RootDatum& datum = b.datum();
    const auto n = static_cast<Vertex>(b.size());

    bool weights_ok = true;
    for (Vertex v = 0; v < n; ++v) {
        if (b.wt(v).size() != datum.coord_dim()) {
            add(Violation::Kind::WeightLength, v, 0, "weight " + b.wt(v).to_string() + " has wrong length");
            weights_ok = false;
        }
    }
    for (const auto& issue : b.build_issues()) {
        add(Violation::Kind::ConflictingEdge, issue.vertex, issue.node,
            std::string(issue.raising ? "e" : "f") + " has two targets " + std::to_string(issue.kept) + " and " +
                std::to_string(issue.rejected));
    }

    for (Vertex v = 0; v < n; ++v) {
        for (int i = 1; i <= b.num_nodes(); ++i) {
            Vertex fv = b.f(v, i), ev = b.e(v, i);
            if (fv != kNone && b.e(fv, i) != v)
                add(Violation::Kind::InverseMismatch, v, i,
                    "f maps to " + std::to_string(fv) + " but e of that vertex is not this one");
            if (ev != kNone && b.f(ev, i) != v)
                add(Violation::Kind::InverseMismatch, v, i,
                    "e maps to " + std::to_string(ev) + " but f of that vertex is not this one");
            if (weights_ok) {
                const Weight alpha = datum.simple_root(i);
                if (fv != kNone && b.wt(fv) != b.wt(v) - alpha)
                    add(Violation::Kind::WeightShift, v, i,
                        "wt(f b) = " + b.wt(fv).to_string() + ", expected " + (b.wt(v) - alpha).to_string());
                if (ev != kNone && b.wt(ev) != b.wt(v) + alpha)
                    add(Violation::Kind::WeightShift, v, i,
                        "wt(e b) = " + b.wt(ev).to_string() + ", expected " + (b.wt(v) + alpha).to_string());
            }
        }
    }

    bool acyclic = true;
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 1; i <= b.num_nodes(); ++i) {
            int eps = walk(b, v, i, true);
            int ph = walk(b, v, i, false);
            if (eps < 0 || ph < 0) {
                add(Violation::Kind::Cycle, v, i, "string through this vertex is a cycle");
                acyclic = false;
                continue;
            }
            if (weights_ok && ph - eps != datum.pairing(b.wt(v), i))
                add(Violation::Kind::StringLength, v, i,
                    "phi - epsilon = " + std::to_string(ph - eps) + " but <wt, alpha^vee> = " +
                        std::to_string(datum.pairing(b.wt(v), i)));
        }
    }

    if (acyclic) {
        int count = 0;
        std::vector<int> comp = component_ids(b, &count);
        std::vector<int> highs(static_cast<std::size_t>(count), 0), lows(static_cast<std::size_t>(count), 0);
        std::vector<Vertex> first(static_cast<std::size_t>(count), kNone);
        for (Vertex v : raising_sinks(b)) ++highs[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        for (Vertex v : lowering_sinks(b)) ++lows[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        for (Vertex v = n; v-- > 0;) first[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = v;
        for (std::size_t c = 0; c < static_cast<std::size_t>(count); ++c) {
            if (highs[c] != 1)
                add(Violation::Kind::ExtremalCount, first[c], 0,
                    "component has " + std::to_string(highs[c]) + " vertices killed by all e_i");
            if (lows[c] != 1)
                add(Violation::Kind::ExtremalCount, first[c], 0,
                    "component has " + std::to_string(lows[c]) + " vertices killed by all f_i");
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Components and extremal elements

std::vector<int> component_ids(const CrystalGraph& b, int* count) {
    const std::size_t n = b.size();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = next;
        stack.push_back(static_cast<Vertex>(start));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (int i = 1; i <= b.num_nodes(); ++i) {
                for (Vertex w : {b.e(v, i), b.f(v, i)}) {
                    if (w != kNone && comp[static_cast<std::size_t>(w)] < 0) {
                        comp[static_cast<std::size_t>(w)] = next;
                        stack.push_back(w);
                    }
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

std::vector<Component> components(const CrystalGraph& b) {
    int count = 0;
    std::vector<int> comp = component_ids(b, &count);
    std::vector<Component> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<Vertex> local(b.size(), kNone);
    for (int c = 0; c < count; ++c) {
        CrystalGraph::Builder builder(b.datum());
        std::vector<Vertex> to_parent;
        for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
            if (comp[static_cast<std::size_t>(v)] != c) continue;
            local[static_cast<std::size_t>(v)] = builder.add_vertex(b.wt(v), b.label(v));
            to_parent.push_back(v);
        }
        for (Vertex v : to_parent) {
            for (int i = 1; i <= b.num_nodes(); ++i) {
                if (Vertex w = b.f(v, i); w != kNone) builder.set_f(local[static_cast<std::size_t>(v)], i, local[static_cast<std::size_t>(w)]);
                if (Vertex w = b.e(v, i); w != kNone) builder.set_e(local[static_cast<std::size_t>(v)], i, local[static_cast<std::size_t>(w)]);
            }
        }
        out.push_back({std::move(builder).build(), std::move(to_parent)});
    }
    return out;
}

namespace {

std::vector<Vertex> sinks(const CrystalGraph& b, bool raising) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
        bool killed = true;
        for (int i = 1; i <= b.num_nodes() && killed; ++i) killed = (raising ? b.e(v, i) : b.f(v, i)) == kNone;
        if (killed) out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<Vertex> raising_sinks(const CrystalGraph& b) { return sinks(b, true); }
std::vector<Vertex> lowering_sinks(const CrystalGraph& b) { return sinks(b, false); }

Vertex highest_weight_element(const CrystalGraph& b) {
    auto s = raising_sinks(b);
    if (s.size() != 1)
        throw NotNormalError("expected one highest weight element, found " + std::to_string(s.size()));
    return s.front();
}

Vertex lowest_weight_element(const CrystalGraph& b) {
    auto s = lowering_sinks(b);
    if (s.size() != 1)
        throw NotNormalError("expected one lowest weight element, found " + std::to_string(s.size()));
    return s.front();
}

std::optional<CrystalMorphism> isomorphism(const CrystalGraph& b, const CrystalGraph& c) {
    if (!(b.datum() == c.datum())) throw DatumMismatch("isomorphism across different root data");
    if (!validate(b).ok() || !validate(c).ok()) throw NotNormalError("isomorphism requires valid crystals");
    if (b.size() != c.size()) return std::nullopt;
    const Vertex hb = highest_weight_element(b);
    const Vertex hc = highest_weight_element(c);
    if (b.wt(hb) != c.wt(hc)) return std::nullopt;

    CrystalMorphism map{std::vector<Vertex>(b.size(), kNone)};
    std::vector<char> used(c.size(), 0);
    map.image[static_cast<std::size_t>(hb)] = hc;
    used[static_cast<std::size_t>(hc)] = 1;
    std::queue<Vertex> todo;
    todo.push(hb);
    while (!todo.empty()) {
        Vertex v = todo.front();
        todo.pop();
        Vertex w = map(v);
        for (int i = 1; i <= b.num_nodes(); ++i) {
            Vertex fv = b.f(v, i), fw = c.f(w, i);
            if ((fv == kNone) != (fw == kNone)) return std::nullopt;
            if (fv == kNone) continue;
            Vertex& slot = map.image[static_cast<std::size_t>(fv)];
            if (slot == kNone) {
                if (used[static_cast<std::size_t>(fw)]) return std::nullopt;
                slot = fw;
                used[static_cast<std::size_t>(fw)] = 1;
                todo.push(fv);
            } else if (slot != fw) {
                return std::nullopt;
            }
        }
    }
    if (std::find(map.image.begin(), map.image.end(), kNone) != map.image.end()) return std::nullopt;
    if (!is_morphism(b, c, map)) return std::nullopt;
    return map;
}

CrystalGraph direct_sum(const CrystalGraph& a, const CrystalGraph& b) {
    if (!(a.datum() == b.datum())) throw DatumMismatch("direct sum across different root data");
    CrystalGraph::Builder builder(a.datum());
    for (const CrystalGraph* part : {&a, &b})
        for (Vertex v = 0; v < static_cast<Vertex>(part->size()); ++v) builder.add_vertex(part->wt(v), part->label(v));
    const auto offset = static_cast<Vertex>(a.size());
    Vertex shift = 0;
    for (const CrystalGraph* part : {&a, &b}) {
        for (Vertex v = 0; v < static_cast<Vertex>(part->size()); ++v) {
            for (int i = 1; i <= part->num_nodes(); ++i) {
                if (Vertex w = part->f(v, i); w != kNone) builder.set_f(v + shift, i, w + shift);
                if (Vertex w = part->e(v, i); w != kNone) builder.set_e(v + shift, i, w + shift);
            }
        }
        shift = offset;
    }
    return std::move(builder).build();
}

std::vector<Weight> character(const CrystalGraph& b) {
    std::vector<Weight> out;
    out.reserve(b.size());
    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) out.push_back(b.wt(v));
    std::sort(out.begin(), out.end());
    return out;
}

CrystalMorphism closed_family_inclusion(const CrystalGraph& b_lm, const CrystalGraph& a, const CrystalGraph& b) {
    const Vertex ha = highest_weight_element(a);
    const Vertex hb = highest_weight_element(b);
    const Vertex top = highest_weight_element(b_lm);
    if (b_lm.wt(top) != a.wt(ha) + b.wt(hb))
        throw NotNormalError("highest weight of the source is not the sum of the factors' highest weights");
    const CrystalGraph product = tensor(a, b);
    const Vertex corner = static_cast<Vertex>(static_cast<std::size_t>(ha) * b.size() + static_cast<std::size_t>(hb));
    for (const Component& piece : components(product)) {
        auto where = std::find(piece.to_parent.begin(), piece.to_parent.end(), corner);
        if (where == piece.to_parent.end()) continue;
        auto iso = isomorphism(b_lm, piece.graph);
        if (!iso) break;
        CrystalMorphism out;
        for (Vertex v : iso->image) out.image.push_back(piece.to_parent[static_cast<std::size_t>(v)]);
        return out;
    }
    throw NotNormalError("no inclusion of crystals exists for these inputs");
}

std::vector<Vertex> canonical_order(const CrystalGraph& b) {
    std::vector<Vertex> order;
    order.reserve(b.size());
    std::vector<char> seen(b.size(), 0);
    for (Vertex root : raising_sinks(b)) {
        if (seen[static_cast<std::size_t>(root)]) throw NotNormalError("component with several highest weight elements");
        std::queue<Vertex> todo;
        todo.push(root);
        seen[static_cast<std::size_t>(root)] = 1;
        while (!todo.empty()) {
            Vertex v = todo.front();
            todo.pop();
            order.push_back(v);
            for (int i = 1; i <= b.num_nodes(); ++i) {
                Vertex w = b.f(v, i);
                if (w != kNone && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    todo.push(w);
                }
            }
        }
    }
    if (order.size() != b.size()) throw NotNormalError("some vertices are not reachable from a highest weight element");
    return order;
}

CrystalGraph canonical_form(const CrystalGraph& b) {
    auto order = canonical_order(b);
    return b.relabeled(order);
}

}  // namespace coboundary
