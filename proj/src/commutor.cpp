#include "coboundary/commutor.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "coboundary/errors.hpp"
#include "coboundary/tensor.hpp"

namespace coboundary {

VertexMap xi(const CrystalGraph& b) {
    const RootDatum& datum = b.datum();
    const int nodes = b.num_nodes();
    VertexMap map{std::vector<Vertex>(b.size(), kNone)};

    int count = 0;
    const std::vector<int> comp = component_ids(b, &count);
    std::vector<Vertex> high(static_cast<std::size_t>(count), kNone), low(static_cast<std::size_t>(count), kNone);
    auto record = [&](std::vector<Vertex>& slot, Vertex v, const char* what) {
        Vertex& cell = slot[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        if (cell != kNone) throw NotNormalError(std::string("component with two ") + what + " weight elements");
        cell = v;
    };
    for (Vertex v : raising_sinks(b)) record(high, v, "highest");
    for (Vertex v : lowering_sinks(b)) record(low, v, "lowest");

    std::queue<Vertex> todo;
    for (std::size_t c = 0; c < static_cast<std::size_t>(count); ++c) {
        if (high[c] == kNone || low[c] == kNone) throw NotNormalError("component without extremal elements");
        map.image[static_cast<std::size_t>(low[c])] = high[c];
        todo.push(low[c]);
    }
    while (!todo.empty()) {
        Vertex x = todo.front();
        todo.pop();
        for (int i = 1; i <= nodes; ++i) {
            Vertex y = b.e(x, datum.theta(i));
            if (y == kNone) continue;
            Vertex image = b.f(map(x), i);
            if (image == kNone) throw NotNormalError("xi propagation reached an undefined f edge");
            Vertex& cell = map.image[static_cast<std::size_t>(y)];
            if (cell == kNone) {
                cell = image;
                todo.push(y);
            } else if (cell != image) {
                throw NotNormalError("xi propagation conflict");
            }
        }
    }
    if (std::find(map.image.begin(), map.image.end(), kNone) != map.image.end())
        throw NotNormalError("xi propagation did not reach every vertex");
    if (!is_xi(b, map)) throw NotNormalError("propagated map violates the xi relations");
    return map;
}

bool is_xi(const CrystalGraph& b, const VertexMap& map) {
    if (!map.is_bijection(b.size())) return false;
    const RootDatum& datum = b.datum();
    const std::vector<int> comp = component_ids(b);
    auto apply = [&](Vertex v) { return v == kNone ? kNone : map(v); };
    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
        const Vertex w = map(v);
        if (map(w) != v) return false;
        if (comp[static_cast<std::size_t>(v)] != comp[static_cast<std::size_t>(w)]) return false;
        if (b.wt(w) != datum.w0_action(b.wt(v))) return false;
        for (int i = 1; i <= b.num_nodes(); ++i) {
            const int t = datum.theta(i);
            if (b.e(w, i) != apply(b.f(v, t))) return false;
            if (b.f(w, i) != apply(b.e(v, t))) return false;
        }
    }
    return true;
}

namespace {

std::size_t encode(const std::vector<std::size_t>& sizes, const std::vector<Vertex>& tuple) {
    std::size_t v = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) v = v * sizes[k] + static_cast<std::size_t>(tuple[k]);
    return v;
}

void decode(const std::vector<std::size_t>& sizes, std::size_t v, std::vector<Vertex>& tuple) {
    tuple.resize(sizes.size());
    for (std::size_t k = sizes.size(); k-- > 0;) {
        tuple[k] = static_cast<Vertex>(v % sizes[k]);
        v /= sizes[k];
    }
}

Ordering slice(const Ordering& order, int from, int to) {  // 1-based inclusive
    return Ordering(order.begin() + (from - 1), order.begin() + to);
}

}  // namespace

CrystalMorphism sigma(const CrystalGraph& a, const CrystalGraph& b) {
    TensorFamily family({a, b});
    return sigma_block(family, {0, 1}, 1, 1, 2).map;
}

CrystalMorphism sigma_alt(const CrystalGraph& a, const CrystalGraph& b) {
    if (!(a.datum() == b.datum())) throw DatumMismatch("commutor across different root data");
    const VertexMap xa = xi(a), xb = xi(b), xab = xi(tensor(a, b));
    const auto na = static_cast<Vertex>(a.size()), nb = static_cast<Vertex>(b.size());
    CrystalMorphism out;
    out.image.reserve(a.size() * b.size());
    for (Vertex v = 0; v < na * nb; ++v) {
        const Vertex w = xab(v);
        const Vertex c = w / nb, d = w % nb;
        out.image.push_back(xb(d) * na + xa(c));
    }
    return out;
}

Ordering identity_ordering(std::size_t n) {
    Ordering o(n);
    std::iota(o.begin(), o.end(), std::size_t{0});
    return o;
}

TensorFamily::TensorFamily(std::vector<CrystalGraph> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error("empty tensor family");
    for (const CrystalGraph& c : factors_)
        if (!(c.datum() == factors_.front().datum())) throw DatumMismatch("tensor family across different root data");
}

void TensorFamily::check(const Ordering& order) const {
    for (std::size_t label : order)
        if (label >= factors_.size()) throw IndexError("factor label out of range");
}

std::vector<std::size_t> TensorFamily::sizes(const Ordering& order) const {
    check(order);
    std::vector<std::size_t> out;
    out.reserve(order.size());
    for (std::size_t label : order) out.push_back(factors_[label].size());
    return out;
}

std::size_t TensorFamily::product_size(const Ordering& order) const {
    std::size_t n = 1;
    for (std::size_t s : sizes(order)) n *= s;
    return n;
}

const CrystalGraph& TensorFamily::product(const Ordering& order) {
    check(order);
    if (order.empty()) throw Error("product of no factors");
    auto it = products_.find(order);
    if (it != products_.end()) return it->second;
    std::vector<const CrystalGraph*> ptrs;
    for (std::size_t label : order) ptrs.push_back(&factors_[label]);
    return products_.emplace(order, tensor_many(std::span<const CrystalGraph* const>(ptrs))).first->second;
}

const VertexMap& TensorFamily::xi(const Ordering& order) {
    auto it = xis_.find(order);
    if (it != xis_.end()) return it->second;
    VertexMap map = coboundary::xi(product(order));
    return xis_.emplace(order, std::move(map)).first->second;
}

TensorMap TensorMap::identity(TensorFamily& family, const Ordering& order) {
    return {order, order, VertexMap::identity(family.product_size(order))};
}

TensorMap TensorMap::then(const TensorMap& next) const {
    if (target != next.source) throw IndexError("composing tensor maps with mismatched factor orders");
    return {source, next.target, map.then(next.map)};
}

Ordering reverse_interval(Ordering order, int p, int q) {
    if (p < 1 || q > static_cast<int>(order.size()) || p > q) throw IndexError("interval out of range");
    std::reverse(order.begin() + (p - 1), order.begin() + q);
    return order;
}

TensorMap sigma_block(TensorFamily& family, const Ordering& source, int p, int r, int q) {
    const int n = static_cast<int>(source.size());
    if (!(1 <= p && p <= r && r < q && q <= n))
        throw IndexError("sigma block needs 1 <= p <= r < q <= n, got (" + std::to_string(p) + "," +
                         std::to_string(r) + "," + std::to_string(q) + ") with n=" + std::to_string(n));
    const Ordering left = slice(source, p, r), right = slice(source, r + 1, q);
    Ordering swapped = right;
    swapped.insert(swapped.end(), left.begin(), left.end());
    Ordering target(source.begin(), source.begin() + (p - 1));
    target.insert(target.end(), swapped.begin(), swapped.end());
    target.insert(target.end(), source.begin() + q, source.end());

    const VertexMap& xi_left = family.xi(left);
    const VertexMap& xi_right = family.xi(right);
    const VertexMap& xi_swapped = family.xi(swapped);
    const auto src_sizes = family.sizes(source), tgt_sizes = family.sizes(target);
    const auto left_sizes = family.sizes(left), right_sizes = family.sizes(right), swapped_sizes = family.sizes(swapped);
    const std::size_t left_n = family.product_size(left);

    const std::size_t total = family.product_size(source);
    TensorMap out{source, target, {}};
    out.map.image.reserve(total);
    std::vector<Vertex> tuple, part, result;
    for (std::size_t v = 0; v < total; ++v) {
        decode(src_sizes, v, tuple);
        part.assign(tuple.begin() + (p - 1), tuple.begin() + r);
        const std::size_t x = encode(left_sizes, part);
        part.assign(tuple.begin() + r, tuple.begin() + q);
        const std::size_t y = encode(right_sizes, part);
        const auto yx = static_cast<std::size_t>(xi_right(static_cast<Vertex>(y))) * left_n +
                        static_cast<std::size_t>(xi_left(static_cast<Vertex>(x)));
        decode(swapped_sizes, static_cast<std::size_t>(xi_swapped(static_cast<Vertex>(yx))), part);
        result = tuple;
        std::copy(part.begin(), part.end(), result.begin() + (p - 1));
        out.map.image.push_back(static_cast<Vertex>(encode(tgt_sizes, result)));
    }
    return out;
}

TensorMap s_interval(TensorFamily& family, const Ordering& source, int p, int q) {
    const int n = static_cast<int>(source.size());
    if (!(1 <= p && p <= q && q <= n)) throw IndexError("interval reversal needs 1 <= p <= q <= n");
    if (p == q) return TensorMap::identity(family, source);
    const Ordering target = reverse_interval(source, p, q);
    const Ordering reversed_block = slice(target, p, q);
    const VertexMap& xi_block = family.xi(reversed_block);
    std::vector<const VertexMap*> xi_single;
    for (int k = p; k <= q; ++k) xi_single.push_back(&family.xi({source[static_cast<std::size_t>(k - 1)]}));
    const auto src_sizes = family.sizes(source), tgt_sizes = family.sizes(target);
    const auto block_sizes = family.sizes(reversed_block);

    const std::size_t total = family.product_size(source);
    TensorMap out{source, target, {}};
    out.map.image.reserve(total);
    std::vector<Vertex> tuple, part, result;
    for (std::size_t v = 0; v < total; ++v) {
        decode(src_sizes, v, tuple);
        part.clear();
        for (int k = q; k >= p; --k) part.push_back((*xi_single[static_cast<std::size_t>(k - p)])(tuple[static_cast<std::size_t>(k - 1)]));
        decode(block_sizes, static_cast<std::size_t>(xi_block(static_cast<Vertex>(encode(block_sizes, part)))), part);
        result = tuple;
        std::copy(part.begin(), part.end(), result.begin() + (p - 1));
        out.map.image.push_back(static_cast<Vertex>(encode(tgt_sizes, result)));
    }
    return out;
}

TensorMap s_interval(TensorFamily& family, int p, int q) {
    return s_interval(family, identity_ordering(family.size()), p, q);
}

TensorMap s_interval_recursive(TensorFamily& family, const Ordering& source, int p, int q) {
    const int n = static_cast<int>(source.size());
    if (!(1 <= p && p <= q && q <= n)) throw IndexError("interval reversal needs 1 <= p <= q <= n");
    if (p == q) return TensorMap::identity(family, source);
    if (q == p + 1) return sigma_block(family, source, p, p, q);
    TensorMap inner = s_interval_recursive(family, source, p + 1, q);
    return inner.then(sigma_block(family, inner.target, p, p, q));
}

}  // namespace coboundary
