#include "oracles/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oracle {

std::vector<Tableau> enumerate_ssyt(const Shape& shape, int n) {
    std::vector<Tableau> out;
    if (shape.rows() > n) return out;
    Tableau t;
    for (int part : shape.parts) t.rows.emplace_back(static_cast<std::size_t>(part), 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.parts[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
        for (int x = lo; x <= n; ++x) {
            t.rows[r][c] = x;
            fill(k + 1);
        }
        t.rows[r][c] = 0;
    };
    fill(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void partitions_containing(const std::vector<int>& lambda, int extra, int n, std::vector<std::vector<int>>& out) {
    std::vector<int> nu(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (row == n) {
            if (left == 0) out.push_back(nu);
            return;
        }
        int base = row < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(row)] : 0;
        int cap = row == 0 ? base + left : std::min(nu[static_cast<std::size_t>(row - 1)], base + left);
        for (int v = base; v <= cap; ++v) {
            nu[static_cast<std::size_t>(row)] = v;
            rec(row + 1, left - (v - base));
        }
    };
    rec(0, extra);
}

// LR tableaux: semistandard filling of nu/lambda with content mu whose reading
// word, rows top to bottom and each row right to left, is a lattice word.
int lr_count(const std::vector<int>& lambda, const std::vector<int>& nu, const std::vector<int>& mu) {
    const int rows = static_cast<int>(nu.size());
    auto lam = [&](int r) { return r < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(r)] : 0; };
    std::vector<std::pair<int, int>> cells;  // reading order
    for (int r = 0; r < rows; ++r)
        for (int c = nu[static_cast<std::size_t>(r)] - 1; c >= lam(r); --c) cells.emplace_back(r, c);
    std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[static_cast<std::size_t>(r)]), 0);
    std::vector<int> used(mu.size() + 1, 0);
    int count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int x = 1; x <= static_cast<int>(mu.size()); ++x) {
            if (used[static_cast<std::size_t>(x)] >= mu[static_cast<std::size_t>(x - 1)]) continue;
            if (x > 1 && used[static_cast<std::size_t>(x)] + 1 > used[static_cast<std::size_t>(x - 1)]) continue;
            // row weakly increasing: right neighbour already filled
            if (c + 1 < nu[static_cast<std::size_t>(r)] && fill[r][static_cast<std::size_t>(c + 1)] < x) continue;
            // column strict: cell above, if in the skew shape, is already filled
            if (r > 0 && c >= lam(r - 1) && fill[r - 1][static_cast<std::size_t>(c)] >= x) continue;
            fill[r][static_cast<std::size_t>(c)] = x;
            ++used[static_cast<std::size_t>(x)];
            rec(k + 1);
            --used[static_cast<std::size_t>(x)];
            fill[r][static_cast<std::size_t>(c)] = 0;
        }
    };
    rec(0);
    return count;
}

}  // namespace

std::map<std::vector<int>, int> lr_product(const Shape& lambda, const Shape& mu, int n) {
    std::map<std::vector<int>, int> out;
    if (lambda.rows() > n || mu.rows() > n) return out;
    std::vector<std::vector<int>> candidates;
    partitions_containing(lambda.parts, mu.size(), n, candidates);
    for (const auto& nu : candidates) {
        int c = lr_count(lambda.parts, nu, mu.parts);
        if (c) out[nu] = c;
    }
    return out;
}

int eps(const CrystalGraph& b, Vertex v, int i) {
    int k = 0;
    for (Vertex x = b.e(v, i); x != coboundary::kNone; x = b.e(x, i)) ++k;
    return k;
}

int phi(const CrystalGraph& b, Vertex v, int i) {
    int k = 0;
    for (Vertex x = b.f(v, i); x != coboundary::kNone; x = b.f(x, i)) ++k;
    return k;
}

namespace {

// Surviving signs after cancellation: (+ at factor, - at factor), in the
// reversed order of factors.
struct Reduced {
    std::vector<std::size_t> minus;  // factor index of each surviving -, left to right
    std::vector<std::size_t> plus;   // factor index of each surviving +, left to right
};

Reduced reduce(const std::vector<const CrystalGraph*>& factors, const std::vector<Vertex>& tuple, int i) {
    std::vector<std::pair<char, std::size_t>> stack;
    for (std::size_t k = factors.size(); k-- > 0;) {
        int m = eps(*factors[k], tuple[k], i), p = phi(*factors[k], tuple[k], i);
        for (int t = 0; t < m; ++t) {
            if (!stack.empty() && stack.back().first == '+')
                stack.pop_back();
            else
                stack.emplace_back('-', k);
        }
        for (int t = 0; t < p; ++t) stack.emplace_back('+', k);
    }
    Reduced r;
    for (auto [s, k] : stack) (s == '-' ? r.minus : r.plus).push_back(k);
    return r;
}

}  // namespace

std::optional<std::vector<Vertex>> tensor_f(const std::vector<const CrystalGraph*>& factors,
                                            const std::vector<Vertex>& tuple, int i) {
    Reduced r = reduce(factors, tuple, i);
    if (r.plus.empty()) return std::nullopt;
    std::vector<Vertex> out = tuple;
    std::size_t k = r.plus.front();
    out[k] = factors[k]->f(tuple[k], i);
    return out;
}

std::optional<std::vector<Vertex>> tensor_e(const std::vector<const CrystalGraph*>& factors,
                                            const std::vector<Vertex>& tuple, int i) {
    Reduced r = reduce(factors, tuple, i);
    if (r.minus.empty()) return std::nullopt;
    std::vector<Vertex> out = tuple;
    std::size_t k = r.minus.back();
    out[k] = factors[k]->e(tuple[k], i);
    return out;
}

int positive_root_count(const std::vector<std::vector<int>>& a) {
    const std::size_t r = a.size();
    // roots in simple-root coordinates; s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> todo;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        roots.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        auto beta = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i < r; ++i) {
            int pairing = 0;
            for (std::size_t j = 0; j < r; ++j) pairing += a[i][j] * beta[j];
            auto gamma = beta;
            gamma[i] -= pairing;
            if (roots.insert(gamma).second) todo.push_back(gamma);
        }
    }
    int positive = 0;
    for (const auto& x : roots)
        if (std::all_of(x.begin(), x.end(), [](int c) { return c >= 0; })) ++positive;
    return positive;
}

long long laminar_families(int n, int k) {
    std::vector<std::pair<int, int>> iv;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) iv.emplace_back(p, q);
    auto compatible = [](std::pair<int, int> a, std::pair<int, int> b) {
        bool disjoint = a.second < b.first || b.second < a.first;
        bool nested = (a.first <= b.first && b.second <= a.second) || (b.first <= a.first && a.second <= b.second);
        return disjoint || nested;
    };
    long long count = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == k) {
            ++count;
            return;
        }
        for (std::size_t j = from; j < iv.size(); ++j) {
            bool ok = true;
            for (std::size_t c : chosen) ok = ok && compatible(iv[c], iv[j]);
            if (!ok) continue;
            chosen.push_back(j);
            rec(j + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return count;
}

}  // namespace oracle

namespace oracle {

std::string xi_relations(const CrystalGraph& b, const coboundary::VertexMap& xi) {
    using coboundary::kNone;
    if (xi.size() != b.size()) return "size mismatch";
    const auto& d = b.datum();
    auto apply = [&](Vertex v) { return v == kNone ? kNone : xi(v); };
    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
        const std::string at = " at vertex " + std::to_string(v);
        if (xi(xi(v)) != v) return "not an involution" + at;
        if (b.wt(xi(v)) != d.w0_action(b.wt(v))) return "wt xi != w0 wt" + at;
        for (int i = 1; i <= b.num_nodes(); ++i) {
            int t = d.theta(i);
            if (b.e(xi(v), i) != apply(b.f(v, t))) return "e_i xi != xi f_theta(i)" + at;
            if (b.f(xi(v), i) != apply(b.e(v, t))) return "f_i xi != xi e_theta(i)" + at;
        }
    }
    return {};
}

}  // namespace oracle
