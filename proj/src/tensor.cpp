#include "coboundary/tensor.hpp"

#include <sstream>

#include "coboundary/errors.hpp"

namespace coboundary {

namespace {

struct StringLengths {
    std::vector<int> eps, phi;  // indexed v * nodes + (i - 1)
};

StringLengths string_lengths(const CrystalGraph& c) {
    const auto nodes = static_cast<std::size_t>(c.num_nodes());
    StringLengths out{std::vector<int>(c.size() * nodes), std::vector<int>(c.size() * nodes)};
    for (Vertex v = 0; v < static_cast<Vertex>(c.size()); ++v)
        for (int i = 1; i <= c.num_nodes(); ++i) {
            out.eps[static_cast<std::size_t>(v) * nodes + static_cast<std::size_t>(i - 1)] = c.epsilon(v, i);
            out.phi[static_cast<std::size_t>(v) * nodes + static_cast<std::size_t>(i - 1)] = c.phi(v, i);
        }
    return out;
}

std::string tuple_label(const CrystalGraph& a, Vertex x, const CrystalGraph& b, Vertex y) {
    auto part = [](const CrystalGraph& c, Vertex v) {
        std::string s = c.label(v).empty() ? std::to_string(v) : c.label(v);
        if (c.arity() > 1 && s.size() > 1 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
        return s;
    };
    return "(" + part(a, x) + "," + part(b, y) + ")";
}

}  // namespace

CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b) {
    if (!(a.datum() == b.datum())) throw DatumMismatch("tensor product across different root data");
    const auto nodes = static_cast<std::size_t>(a.num_nodes());
    const StringLengths la = string_lengths(a);
    const StringLengths lb = string_lengths(b);
    const bool labelled = a.has_labels() || b.has_labels();

    CrystalGraph::Builder builder(a.datum());
    for (Vertex x = 0; x < static_cast<Vertex>(a.size()); ++x)
        for (Vertex y = 0; y < static_cast<Vertex>(b.size()); ++y)
            builder.add_vertex(a.wt(x) + b.wt(y), labelled ? tuple_label(a, x, b, y) : std::string{});

    const auto width = static_cast<Vertex>(b.size());
    auto pair = [width](Vertex x, Vertex y) { return x * width + y; };
    for (Vertex x = 0; x < static_cast<Vertex>(a.size()); ++x) {
        for (Vertex y = 0; y < width; ++y) {
            for (int i = 1; i <= a.num_nodes(); ++i) {
                const std::size_t ka = static_cast<std::size_t>(x) * nodes + static_cast<std::size_t>(i - 1);
                const std::size_t kb = static_cast<std::size_t>(y) * nodes + static_cast<std::size_t>(i - 1);
                const int eps = la.eps[ka];
                const int phi = lb.phi[kb];
                if (eps > phi) {
                    if (Vertex t = a.e(x, i); t != kNone) builder.set_e(pair(x, y), i, pair(t, y));
                } else if (Vertex t = b.e(y, i); t != kNone) {
                    builder.set_e(pair(x, y), i, pair(x, t));
                }
                if (eps >= phi) {
                    if (Vertex t = a.f(x, i); t != kNone) builder.set_f(pair(x, y), i, pair(t, y));
                } else if (Vertex t = b.f(y, i); t != kNone) {
                    builder.set_f(pair(x, y), i, pair(x, t));
                }
            }
        }
    }
    std::vector<std::size_t> sizes = a.factor_sizes();
    sizes.insert(sizes.end(), b.factor_sizes().begin(), b.factor_sizes().end());
    builder.set_factor_sizes(std::move(sizes));
    return std::move(builder).build();
}

CrystalGraph tensor_many(std::span<const CrystalGraph* const> factors) {
    if (factors.empty()) throw Error("tensor product of an empty list");
    CrystalGraph out = *factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) out = tensor(out, *factors[k]);
    return out;
}

CrystalGraph tensor_many(std::span<const CrystalGraph> factors) {
    std::vector<const CrystalGraph*> ptrs;
    for (const CrystalGraph& c : factors) ptrs.push_back(&c);
    return tensor_many(std::span<const CrystalGraph* const>(ptrs));
}

Decomposition decompose(const CrystalGraph& b) {
    ValidationReport report = validate(b);
    if (!report.ok()) throw NotNormalError("cannot decompose an invalid crystal:\n" + report.to_string());
    Decomposition out;
    for (Vertex v : raising_sinks(b)) ++out[b.wt(v)];
    return out;
}

std::string to_string(const Decomposition& d) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [weight, mult] : d) {
        if (!first) os << ", ";
        first = false;
        os << weight.to_string() << ':' << mult;
    }
    os << '}';
    return os.str();
}

}  // namespace coboundary
