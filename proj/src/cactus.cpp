#include "coboundary/cactus.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "coboundary/errors.hpp"

namespace coboundary {

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(static_cast<std::size_t>(n));
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

Permutation Permutation::reversal(int n, Interval s) {
    if (!(1 <= s.p && s.p <= s.q && s.q <= n)) throw IndexError("reversal interval out of range");
    Permutation r = identity(n);
    for (int k = s.p; k <= s.q; ++k) r.images[static_cast<std::size_t>(k - 1)] = s.p + s.q - k;
    return r;
}

bool Permutation::valid() const {
    std::vector<char> seen(images.size() + 1, 0);
    for (int x : images) {
        if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

Permutation Permutation::after(const Permutation& other) const {
    if (other.size() != size()) throw IndexError("composing permutations of different degree");
    Permutation out;
    for (int x : other.images) out.images.push_back((*this)(x));
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images.resize(images.size());
    for (int k = 1; k <= size(); ++k) out.images[static_cast<std::size_t>((*this)(k) - 1)] = k;
    return out;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (int x : images) os << x;
    return os.str();
}

// ---------------------------------------------------------------------------
// CactusWord

CactusWord::CactusWord(int n, std::vector<Interval> letters) : n_(n), letters_(std::move(letters)) {
    if (n < 1) throw IndexError("cactus group J_n needs n >= 1");
    for (const Interval& s : letters_)
        if (!(1 <= s.p && s.p < s.q && s.q <= n))
            throw IndexError("generator s(" + std::to_string(s.p) + "," + std::to_string(s.q) + ") out of range for J_" +
                             std::to_string(n));
}

CactusWord CactusWord::parse(std::string_view text, int n) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    std::vector<Interval> letters;
    if (s.empty() || s == "1") return CactusWord(n);
    std::size_t pos = 0;
    auto fail = [&]() -> ParseError { return ParseError("bad cactus word '" + std::string(text) + "'"); };
    auto number = [&]() {
        std::size_t start = pos;
        int value = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = value * 10 + (s[pos++] - '0');
            if (value > 100000) throw fail();
        }
        if (pos == start) throw fail();
        return value;
    };
    for (;;) {
        if (s.compare(pos, 2, "s(") != 0) throw fail();
        pos += 2;
        int p = number();
        if (pos >= s.size() || s[pos++] != ',') throw fail();
        int q = number();
        if (pos >= s.size() || s[pos++] != ')') throw fail();
        letters.push_back({p, q});
        if (pos == s.size()) break;
        if (s[pos++] != '*') throw fail();
    }
    return CactusWord(n, std::move(letters));
}

CactusWord CactusWord::operator*(const CactusWord& other) const {
    if (other.n_ != n_) throw IndexError("multiplying words of different arity");
    std::vector<Interval> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return CactusWord(n_, std::move(out));
}

CactusWord CactusWord::inverse() const {
    return CactusWord(n_, std::vector<Interval>(letters_.rbegin(), letters_.rend()));
}

std::string CactusWord::to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) os << '*';
        os << "s(" << letters_[k].p << ',' << letters_[k].q << ')';
    }
    return os.str();
}

Permutation to_permutation(const CactusWord& w) {
    Permutation out = Permutation::identity(w.arity());
    for (const Interval& s : w.letters()) out = out.after(Permutation::reversal(w.arity(), s));
    return out;
}

namespace {

// Image of the interval inner under the reversal of outer (outer contains inner).
Interval reflect(const Interval& outer, const Interval& inner) {
    return {outer.p + outer.q - inner.q, outer.p + outer.q - inner.p};
}

}  // namespace

std::optional<CactusWord> relation_rewrite(const CactusWord& w, std::size_t position) {
    if (position < 1 || position + 1 > w.length()) return std::nullopt;
    std::vector<Interval> letters = w.letters();
    const std::size_t k = position - 1;
    const Interval a = letters[k], b = letters[k + 1];
    if (a == b) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(k), letters.begin() + static_cast<std::ptrdiff_t>(k + 2));
    } else if (a.disjoint(b)) {
        std::swap(letters[k], letters[k + 1]);
    } else if (a.contains(b)) {
        letters[k] = reflect(a, b);
        letters[k + 1] = a;
    } else if (b.contains(a)) {
        letters[k] = b;
        letters[k + 1] = reflect(b, a);
    } else {
        return std::nullopt;
    }
    return CactusWord(w.arity(), std::move(letters));
}

std::vector<CactusWord> relation_words(int n) {
    std::vector<Interval> gens;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) gens.push_back({p, q});
    std::vector<CactusWord> out;
    for (const Interval& a : gens) out.emplace_back(n, std::vector<Interval>{a, a});
    for (const Interval& a : gens)
        for (const Interval& b : gens) {
            if (a.disjoint(b) && a < b) out.emplace_back(n, std::vector<Interval>{a, b, a, b});
            // s_a s_b = s_b' s_a  <=>  s_a s_b s_a s_b' = 1
            if (a.contains(b) && !(a == b)) out.emplace_back(n, std::vector<Interval>{a, b, a, reflect(a, b)});
        }
    return out;
}

// ---------------------------------------------------------------------------
// Action on tensor products

TensorMap act(const CactusWord& w, TensorFamily& family, const Ordering& source) {
    if (static_cast<int>(source.size()) != w.arity())
        throw IndexError("word of arity " + std::to_string(w.arity()) + " applied to " + std::to_string(source.size()) +
                         " factors");
    TensorMap out = TensorMap::identity(family, source);
    for (const Interval& s : w.letters()) out = out.then(s_interval(family, out.target, s.p, s.q));
    return out;
}

TensorMap act(const CactusWord& w, TensorFamily& family) {
    return act(w, family, identity_ordering(family.size()));
}

bool words_equal_semantically(const CactusWord& a, const CactusWord& b,
                              std::span<const std::vector<CrystalGraph>> probes) {
    if (a.arity() != b.arity()) return false;
    if (to_permutation(a) != to_permutation(b)) return false;
    for (const auto& probe : probes) {
        if (static_cast<int>(probe.size()) != a.arity()) throw IndexError("probe arity does not match the words");
        TensorFamily family(probe);
        if (!(act(a, family) == act(b, family))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Groupoid operad

Permutation GroupoidArrow::target() const { return to_permutation(rho).inverse().after(pi); }

Permutation operad_compose(const Permutation& pi, const Permutation& inner, int i) {
    const int n = pi.size(), k = inner.size();
    if (i < 1 || i > n) throw IndexError("operad composition index out of range");
    if (!pi.valid() || !inner.valid()) throw IndexError("operad composition of invalid permutations");
    const int anchor = pi(i);
    auto outer = [&](int x) { return x < anchor ? x : x + k - 1; };
    Permutation out;
    for (int l = 1; l <= n + k - 1; ++l) {
        if (l < i)
            out.images.push_back(outer(pi(l)));
        else if (l < i + k)
            out.images.push_back(anchor - 1 + inner(l - i + 1));
        else
            out.images.push_back(outer(pi(l - k + 1)));
    }
    return out;
}

GroupoidArrow operad_compose(const GroupoidArrow& a, const GroupoidArrow& b, int i) {
    const int n = a.rho.arity(), k = b.rho.arity();
    if (a.pi.size() != n || b.pi.size() != k) throw IndexError("arrow permutation does not match its word");
    Permutation source = operad_compose(a.pi, b.pi, i);
    std::vector<Interval> letters;
    Permutation current = a.pi;
    for (const Interval& s : a.rho.letters()) {
        const int at = current(i);
        if (at > s.q) {
            letters.push_back(s);
        } else if (at < s.p) {
            letters.push_back({s.p + k - 1, s.q + k - 1});
        } else {
            // Reverse the block in place, then the widened interval; the block
            // comes out in its original internal order.
            if (k > 1) letters.push_back({at, at + k - 1});
            letters.push_back({s.p, s.q + k - 1});
        }
        current = Permutation::reversal(n, s).after(current);
    }
    const int shift = current(i) - 1;
    for (const Interval& s : b.rho.letters()) letters.push_back({s.p + shift, s.q + shift});
    return {CactusWord(n + k - 1, std::move(letters)), std::move(source)};
}

bool operad_action_compatibility(const GroupoidArrow& a, const GroupoidArrow& b, int i,
                                 const std::vector<CrystalGraph>& factors) {
    const int n = a.rho.arity(), k = b.rho.arity();
    if (static_cast<int>(factors.size()) != n + k - 1)
        throw IndexError("operad compatibility needs " + std::to_string(n + k - 1) + " factors");
    if (i < 1 || i > n) throw IndexError("operad composition index out of range");
    TensorFamily flat(factors);
    const int start = a.pi(i);

    // Inner action on the block, as a flat word.
    std::vector<Interval> shifted;
    for (const Interval& s : b.rho.letters()) shifted.push_back({s.p + start - 1, s.q + start - 1});
    const TensorMap inner = act(CactusWord(n + k - 1, shifted), flat);

    // Outer action with the (reordered) block collapsed into one factor. The
    // flattened index of the collapsed product is the flat index.
    const Ordering block(inner.target.begin() + (start - 1), inner.target.begin() + (start - 1 + k));
    std::vector<CrystalGraph> outer_factors;
    std::vector<Ordering> expansion;
    for (int pos = 1; pos <= n + k - 1; ++pos) {
        if (pos == start) {
            outer_factors.push_back(flat.product(block));
            expansion.push_back(block);
            pos += k - 1;
        } else {
            outer_factors.push_back(flat.factor(inner.target[static_cast<std::size_t>(pos - 1)]));
            expansion.push_back({inner.target[static_cast<std::size_t>(pos - 1)]});
        }
    }
    TensorFamily outer_family(std::move(outer_factors));
    const TensorMap outer = act(a.rho, outer_family);
    Ordering lhs_target;
    for (std::size_t label : outer.target) lhs_target.insert(lhs_target.end(), expansion[label].begin(), expansion[label].end());
    const VertexMap lhs = inner.map.then(outer.map);

    const GroupoidArrow composite = operad_compose(a, b, i);
    const TensorMap rhs = act(composite.rho, flat);
    return rhs.target == lhs_target && rhs.map == lhs;
}

}  // namespace coboundary
