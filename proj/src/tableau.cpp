#include "coboundary/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>

#include "coboundary/errors.hpp"

namespace coboundary {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t end = text.find(sep, start);
        out.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

int parse_int(std::string_view token, std::string_view context) {
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (token.empty()) throw ParseError("empty entry in '" + std::string(context) + "'");
    int value = 0;
    for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("non-numeric entry '" + std::string(token) + "' in '" + std::string(context) + "'");
        value = value * 10 + (ch - '0');
        if (value > 1'000'000) throw ParseError("entry too large in '" + std::string(context) + "'");
    }
    return value;
}

}  // namespace

Shape::Shape(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 0) throw Error("negative part in partition");
        if (k && parts[k] > parts[k - 1]) throw Error("partition parts must weakly decrease");
    }
}

Shape Shape::parse(std::string_view text) {
    std::vector<int> p;
    bool blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank)
        for (std::string_view tok : split(text, ',')) p.push_back(parse_int(tok, text));
    try {
        return Shape(std::move(p));
    } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
    }
}

int Shape::size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

Weight Shape::as_weight(int n) const {
    if (rows() > n) throw Error("partition has more than " + std::to_string(n) + " rows");
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    std::copy(parts.begin(), parts.end(), c.begin());
    return Weight(std::move(c));
}

Tableau Tableau::parse(std::string_view text) {
    Tableau t;
    bool blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (blank) return t;
    for (std::string_view row : split(text, '/')) {
        std::vector<int> entries;
        for (std::string_view tok : split(row, ',')) entries.push_back(parse_int(tok, text));
        t.rows.push_back(std::move(entries));
    }
    return t;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) os << '/';
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) os << ',';
            os << rows[r][c];
        }
    }
    return os.str();
}

Shape Tableau::shape() const {
    std::vector<int> p;
    for (const auto& row : rows) p.push_back(static_cast<int>(row.size()));
    return Shape(std::move(p));
}

bool Tableau::is_semistandard(int n) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r && rows[r].size() > rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int x = rows[r][c];
            if (x < 1 || x > n) return false;
            if (c && rows[r][c - 1] > x) return false;
            if (r && rows[r - 1][c] >= x) return false;
        }
    }
    return true;
}

Tableau highest_tableau(const Shape& shape) {
    Tableau t;
    for (int r = 0; r < shape.rows(); ++r) t.rows.emplace_back(static_cast<std::size_t>(shape.parts[static_cast<std::size_t>(r)]), r + 1);
    return t;
}

Weight weight(const Tableau& t, int n) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (const auto& row : t.rows)
        for (int x : row) {
            if (x < 1 || x > n) throw Error("tableau entry " + std::to_string(x) + " exceeds bound " + std::to_string(n));
            ++c[static_cast<std::size_t>(x - 1)];
        }
    return Weight(std::move(c));
}

std::vector<std::pair<int, int>> column_reading_positions(const Tableau& t) {
    std::vector<std::pair<int, int>> out;
    const int width = t.rows.empty() ? 0 : static_cast<int>(t.rows.front().size());
    for (int c = 0; c < width; ++c) {
        int height = 0;
        while (height < static_cast<int>(t.rows.size()) && static_cast<int>(t.rows[static_cast<std::size_t>(height)].size()) > c) ++height;
        for (int r = height - 1; r >= 0; --r) out.emplace_back(r, c);
    }
    return out;
}

std::vector<int> column_reading_word(const Tableau& t) {
    std::vector<int> w;
    for (auto [r, c] : column_reading_positions(t)) w.push_back(t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    return w;
}

namespace {

struct Unmatched {
    std::vector<std::pair<int, int>> lower;  // unmatched i, reading order
    std::vector<std::pair<int, int>> upper;  // unmatched i+1, reading order
};

Unmatched signature(const Tableau& t, int i) {
    Unmatched u;
    for (auto pos : column_reading_positions(t)) {
        int x = t.rows[static_cast<std::size_t>(pos.first)][static_cast<std::size_t>(pos.second)];
        if (x == i + 1) {
            u.upper.push_back(pos);
        } else if (x == i) {
            if (!u.upper.empty())
                u.upper.pop_back();
            else
                u.lower.push_back(pos);
        }
    }
    return u;
}

void check_label(int i, int n) {
    if (i < 1 || i >= n) throw IndexError("crystal operator index " + std::to_string(i) + " out of range for gl_" + std::to_string(n));
}

}  // namespace

std::optional<Tableau> f_op(const Tableau& t, int i, int n) {
    check_label(i, n);
    Unmatched u = signature(t, i);
    if (u.lower.empty()) return std::nullopt;
    Tableau out = t;
    auto [r, c] = u.lower.back();
    out.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = i + 1;
    return out;
}

std::optional<Tableau> e_op(const Tableau& t, int i, int n) {
    check_label(i, n);
    Unmatched u = signature(t, i);
    if (u.upper.empty()) return std::nullopt;
    Tableau out = t;
    auto [r, c] = u.upper.front();
    out.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = i;
    return out;
}

CrystalGraph generate_B_lambda(const Shape& shape, int n) {
    if (n < 1) throw Error("gl_n needs n >= 1");
    if (shape.rows() > n)
        throw Error("shape with " + std::to_string(shape.rows()) + " rows does not fit gl_" + std::to_string(n));
    std::vector<Tableau> order{highest_tableau(shape)};
    std::map<Tableau, Vertex> index{{order.front(), 0}};
    std::vector<std::tuple<Vertex, Vertex, int>> edges;
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (int i = 1; i < n; ++i) {
            auto next = f_op(order[k], i, n);
            if (!next) continue;
            auto [it, inserted] = index.emplace(*next, static_cast<Vertex>(order.size()));
            if (inserted) order.push_back(*next);
            edges.emplace_back(static_cast<Vertex>(k), it->second, i);
        }
    }
    CrystalGraph::Builder builder(RootDatum(Family::GL, n));
    for (const Tableau& t : order) builder.add_vertex(weight(t, n), t.to_string());
    for (auto [from, to, i] : edges) builder.add_edge(from, to, i);
    return std::move(builder).build();
}

Tableau bender_knuth(const Tableau& t, int i) {
    Tableau out = t;
    auto at = [&](std::size_t r, std::size_t c) -> int {
        if (r >= t.rows.size() || c >= t.rows[r].size()) return 0;
        return t.rows[r][c];
    };
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        std::size_t begin = t.rows[r].size(), end = 0;
        int lows = 0, highs = 0;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            int x = t.rows[r][c];
            bool free_low = x == i && at(r + 1, c) != i + 1;
            bool free_high = x == i + 1 && (r == 0 || at(r - 1, c) != i);
            if (!free_low && !free_high) continue;
            begin = std::min(begin, c);
            end = c + 1;
            (free_low ? lows : highs) += 1;
        }
        for (std::size_t c = begin; c < end; ++c)
            out.rows[r][c] = static_cast<int>(c - begin) < highs ? i : i + 1;
    }
    return out;
}

Tableau evacuation(const Tableau& t, int n) {
    if (!t.is_semistandard(n) && !t.rows.empty()) throw Error("evacuation of a non-semistandard tableau");
    Tableau out = t;
    for (int k = n - 1; k >= 1; --k)
        for (int j = 1; j <= k; ++j) out = bender_knuth(out, j);
    return out;
}

Tableau rectangle_evacuation(const Tableau& t, int n) {
    Shape s = t.shape();
    for (int part : s.parts)
        if (part != s.parts.front()) throw Error("rectangle_evacuation needs a rectangular shape");
    Tableau out = t;
    const std::size_t rows = t.rows.size();
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t width = t.rows[r].size();
        for (std::size_t c = 0; c < width; ++c) out.rows[r][c] = n + 1 - t.rows[rows - 1 - r][width - 1 - c];
    }
    return out;
}

}  // namespace coboundary
