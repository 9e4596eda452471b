#include "coboundary/cartan.hpp"

#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

#include "coboundary/errors.hpp"

namespace coboundary {

Weight& Weight::operator+=(const Weight& other) {
    if (other.size() != size()) throw DatumMismatch("weight length mismatch");
    for (std::size_t k = 0; k < size(); ++k) coords[k] += other.coords[k];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    if (other.size() != size()) throw DatumMismatch("weight length mismatch");
    for (std::size_t k = 0; k < size(); ++k) coords[k] -= other.coords[k];
    return *this;
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(int k) const {
    Weight out = *this;
    for (int& c : out.coords) c *= k;
    return out;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (k) os << ',';
        os << coords[k];
    }
    os << ')';
    return os.str();
}

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix type_a(int n) {
    Matrix m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 2;
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
    }
    return m;
}

void link(Matrix& m, int i, int j, int aij = -1, int aji = -1) {
    m[i - 1][j - 1] = aij;
    m[j - 1][i - 1] = aji;
}

Matrix build_matrix(Family family, int rank) {
    switch (family) {
        case Family::A:
            if (rank < 1) throw Error("type A needs rank >= 1");
            return type_a(rank);
        case Family::GL:
            if (rank < 1) throw Error("GL_n needs n >= 1");
            return type_a(rank - 1);
        case Family::B: {
            if (rank < 2) throw Error("type B needs rank >= 2");
            Matrix m = type_a(rank);
            link(m, rank - 1, rank, -1, -2);
            return m;
        }
        case Family::C: {
            if (rank < 2) throw Error("type C needs rank >= 2");
            Matrix m = type_a(rank);
            link(m, rank - 1, rank, -2, -1);
            return m;
        }
        case Family::D: {
            if (rank < 3) throw Error("type D needs rank >= 3");
            Matrix m = type_a(rank);
            link(m, rank - 1, rank, 0, 0);
            link(m, rank - 2, rank);
            return m;
        }
        case Family::E6:
        case Family::E7:
        case Family::E8: {
            Matrix m(rank, std::vector<int>(rank, 0));
            for (int i = 0; i < rank; ++i) m[i][i] = 2;
            link(m, 1, 3);
            link(m, 2, 4);
            for (int i = 3; i < rank; ++i) link(m, i, i + 1);
            return m;
        }
        case Family::F4: {
            Matrix m = type_a(4);
            link(m, 2, 3, -1, -2);
            return m;
        }
        case Family::G2:
            return {{2, -3}, {-1, 2}};
        case Family::Custom:
            break;
    }
    throw Error("unknown family");
}

// det of the leading k x k block by fraction-free elimination.
long long leading_minor(const Matrix& m, std::size_t k) {
    std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = m[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && a[pivot][c] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < k; ++i)
            for (std::size_t j = c + 1; j < k; ++j)
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
        prev = a[c][c];
    }
    return static_cast<long long>(sign * a[k - 1][k - 1]);
}

}  // namespace

bool is_finite_type(const Matrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] != 2) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) return false;
            if ((m[i][j] == 0) != (m[j][i] == 0)) return false;
        }
    }
    // Symmetrizer d with d_i a_ij = d_j a_ji, as rationals num/den.
    std::vector<long long> num(n, 0), den(n, 1);
    for (std::size_t root = 0; root < n; ++root) {
        if (num[root] != 0) continue;
        num[root] = 1;
        std::queue<std::size_t> todo;
        todo.push(root);
        while (!todo.empty()) {
            std::size_t i = todo.front();
            todo.pop();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || m[i][j] == 0 || num[j] != 0) continue;
                // d_j = d_i a_ij / a_ji
                long long nn = num[i] * m[i][j];
                long long dd = den[i] * m[j][i];
                if (dd < 0) nn = -nn, dd = -dd;
                long long g = std::gcd(nn, dd);
                num[j] = nn / g;
                den[j] = dd / g;
                todo.push(j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (num[i] * m[i][j] * den[j] != num[j] * m[j][i] * den[i]) return false;
    // D A symmetric with D > 0: positive definite iff every leading minor of A is positive.
    for (std::size_t k = 1; k <= n; ++k)
        if (leading_minor(m, k) <= 0) return false;
    return true;
}

RootDatum::RootDatum(Family family, int rank)
    : family_(family), rank_(rank), matrix_(build_matrix(family, rank)) {
    finish();
}

RootDatum::RootDatum(Matrix cartan_matrix)
    : family_(Family::Custom),
      rank_(static_cast<int>(cartan_matrix.size())),
      matrix_(std::move(cartan_matrix)) {
    if (!is_finite_type(matrix_)) throw Error("Cartan matrix is not of finite type");
    finish();
}

RootDatum RootDatum::parse(std::string_view name) {
    std::string s;
    for (char ch : name)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::toupper(ch));
    std::size_t digits = s.find_first_of("0123456789");
    if (digits == std::string::npos || digits == 0) throw ParseError("bad Cartan type '" + std::string(name) + "'");
    std::string letters = s.substr(0, digits);
    int rank = 0;
    for (std::size_t k = digits; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw ParseError("bad Cartan type '" + std::string(name) + "'");
        rank = rank * 10 + (s[k] - '0');
        if (rank > 1000) throw ParseError("rank too large in '" + std::string(name) + "'");
    }
    const int minimum = letters == "B" || letters == "C" ? 2 : letters == "D" ? 4 : 1;
    if (rank < minimum) throw ParseError("rank out of range in '" + std::string(name) + "'");
    if (letters == "GL") return RootDatum(Family::GL, rank);
    if (letters == "A") return RootDatum(Family::A, rank);
    if (letters == "B") return RootDatum(Family::B, rank);
    if (letters == "C") return RootDatum(Family::C, rank);
    if (letters == "D") return RootDatum(Family::D, rank);
    if (letters == "E" && rank == 6) return RootDatum(Family::E6, 6);
    if (letters == "E" && rank == 7) return RootDatum(Family::E7, 7);
    if (letters == "E" && rank == 8) return RootDatum(Family::E8, 8);
    if (letters == "F" && rank == 4) return RootDatum(Family::F4, 4);
    if (letters == "G" && rank == 2) return RootDatum(Family::G2, 2);
    throw ParseError("unknown Cartan type '" + std::string(name) + "'");
}

std::size_t RootDatum::coord_dim() const {
    return family_ == Family::GL ? static_cast<std::size_t>(rank_) : matrix_.size();
}

int RootDatum::cartan(int i, int j) const {
    check_node(i);
    check_node(j);
    return matrix_[i - 1][j - 1];
}

std::string RootDatum::name() const {
    switch (family_) {
        case Family::A: return "A" + std::to_string(rank_);
        case Family::B: return "B" + std::to_string(rank_);
        case Family::C: return "C" + std::to_string(rank_);
        case Family::D: return "D" + std::to_string(rank_);
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
        case Family::GL: return "GL" + std::to_string(rank_);
        case Family::Custom: return "custom" + std::to_string(rank_);
    }
    return "?";
}

void RootDatum::check_node(int i) const {
    if (i < 1 || i > num_nodes())
        throw IndexError("node index " + std::to_string(i) + " out of range 1.." + std::to_string(num_nodes()));
}

void RootDatum::check_weight(const Weight& lambda) const {
    if (lambda.size() != coord_dim())
        throw DatumMismatch("weight " + lambda.to_string() + " has wrong length for " + name());
}

Weight RootDatum::simple_root(int i) const {
    check_node(i);
    Weight a = zero();
    if (family_ == Family::GL) {
        a.coords[i - 1] = 1;
        a.coords[i] = -1;
    } else {
        for (int j = 1; j <= num_nodes(); ++j) a.coords[j - 1] = matrix_[j - 1][i - 1];
    }
    return a;
}

Weight RootDatum::rho() const {
    Weight r = zero();
    if (family_ == Family::GL) {
        for (int k = 0; k < rank_; ++k) r.coords[k] = rank_ - 1 - k;
    } else {
        for (int& c : r.coords) c = 1;
    }
    return r;
}

int RootDatum::pairing(const Weight& lambda, int i) const {
    check_node(i);
    check_weight(lambda);
    if (family_ == Family::GL) return lambda.coords[i - 1] - lambda.coords[i];
    return lambda.coords[i - 1];
}

Weight RootDatum::simple_reflection(const Weight& lambda, int i) const {
    return lambda - simple_root(i).scaled(pairing(lambda, i));
}

bool RootDatum::dominant(const Weight& lambda) const {
    for (int i = 1; i <= num_nodes(); ++i)
        if (pairing(lambda, i) < 0) return false;
    return true;
}

void RootDatum::finish() {
    w0_word_.clear();
    Weight w = rho();
    for (;;) {
        int next = 0;
        for (int i = 1; i <= num_nodes() && next == 0; ++i)
            if (pairing(w, i) > 0) next = i;
        if (next == 0) break;
        w = simple_reflection(w, next);
        w0_word_.push_back(next);
    }
    theta_.assign(num_nodes() + 1, 0);
    for (int i = 1; i <= num_nodes(); ++i) {
        Weight target = -w0_action(simple_root(i));
        for (int j = 1; j <= num_nodes(); ++j)
            if (simple_root(j) == target) theta_[i] = j;
        if (theta_[i] == 0) throw std::logic_error("-w0 alpha_" + std::to_string(i) + " is not a simple root");
    }
}

Weight RootDatum::w0_action(const Weight& lambda) const {
    check_weight(lambda);
    Weight w = lambda;
    for (int i : w0_word_) w = simple_reflection(w, i);
    return w;
}

int RootDatum::theta(int i) const {
    check_node(i);
    return theta_[i];
}

}  // namespace coboundary
