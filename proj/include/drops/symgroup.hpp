#pragma once

#include "opalg.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace drops {

using Rational = boost::rational<std::int64_t>;

// Bijection of {1..g}; images[p-1] = sigma(p).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size() + 1, false);
        for (int v : img_) {
            if (v < 1 || v > degree() || seen[v])
                throw Error("permutation images must be a bijection of {1..g}");
            seen[v] = true;
        }
    }

    static Permutation identity(int g) {
        std::vector<int> v(g);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    static Permutation transposition(int a, int b, int g) {
        auto p = identity(g);
        std::swap(p.img_.at(a - 1), p.img_.at(b - 1));
        return p;
    }

    // Cycle notation such as "(132)" or "(1 3)(2 4)"; "e" and "()" mean identity.
    // Cycles are read left to right and composed right to left.
    static Permutation parse(const std::string& text, int g) {
        Permutation out = identity(g);
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (c == ' ' || c == 'e') { ++i; continue; }
            if (c != '(') throw Error("cycle notation: expected '(' at offset " + std::to_string(i));
            std::vector<int> cyc;
            ++i;
            while (i < text.size() && text[i] != ')') {
                if (text[i] == ' ' || text[i] == ',') { ++i; continue; }
                if (text[i] < '0' || text[i] > '9')
                    throw Error("cycle notation: bad character at offset " + std::to_string(i));
                std::size_t j = i;
                while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
                // single digits when written without separators, e.g. (132)
                bool spaced = text.find_first_of(" ,", i) < text.find(')', i);
                if (!spaced) j = i + 1;
                cyc.push_back(std::stoi(text.substr(i, j - i)));
                i = j;
            }
            if (i >= text.size()) throw Error("cycle notation: unterminated cycle");
            ++i;
            std::vector<int> v(g);
            std::iota(v.begin(), v.end(), 1);
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                if (cyc[k] < 1 || cyc[k] > g) throw Error("cycle notation: entry exceeds degree");
                v[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
            }
            out = out * Permutation(std::move(v));
        }
        return out;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int p) const { return p <= degree() ? img_[p - 1] : p; }
    const std::vector<int>& images() const { return img_; }

    // (a*b)(p) = a(b(p))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        int g = std::max(a.degree(), b.degree());
        std::vector<int> v(g);
        for (int p = 1; p <= g; ++p) v[p - 1] = a(b(p));
        return Permutation(std::move(v));
    }

    Permutation extended(int g) const {
        if (g < degree()) throw Error("cannot shrink a permutation");
        std::vector<int> v(g);
        for (int p = 1; p <= g; ++p) v[p - 1] = (*this)(p);
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (int p = 1; p <= degree(); ++p) v[img_[p - 1] - 1] = p;
        return Permutation(std::move(v));
    }

    bool is_identity() const {
        for (int p = 1; p <= degree(); ++p)
            if (img_[p - 1] != p) return false;
        return true;
    }

    int sign() const {
        std::vector<bool> seen(img_.size(), false);
        int s = 1;
        for (int p = 0; p < degree(); ++p) {
            if (seen[p]) continue;
            int len = 0;
            for (int q = p; !seen[q]; q = img_[q] - 1) { seen[q] = true; ++len; }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    std::string str() const {
        std::string out;
        std::vector<bool> seen(img_.size(), false);
        for (int p = 1; p <= degree(); ++p) {
            if (seen[p - 1] || img_[p - 1] == p) continue;
            out += '(';
            for (int q = p; !seen[q - 1]; q = img_[q - 1]) {
                seen[q - 1] = true;
                if (out.back() != '(' && degree() > 9) out += ' ';
                out += std::to_string(q);
            }
            out += ')';
        }
        return out.empty() ? "e" : out;
    }

    friend bool operator<(const Permutation& a, const Permutation& b) {
        int g = std::max(a.degree(), b.degree());
        for (int p = 1; p <= g; ++p)
            if (a(p) != b(p)) return a(p) < b(p);
        return false;
    }
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return !(a < b) && !(b < a);
    }

private:
    std::vector<int> img_;
};

inline std::vector<Permutation> all_permutations(int g) {
    std::vector<int> v(g);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

using Partition = std::vector<int>;

// Partitions of g with at most max_rows parts, largest first in lexicographic order.
inline std::vector<Partition> partitions(int g, int max_rows = 1 << 20) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) { out.push_back(cur); return; }
        if (static_cast<int>(cur.size()) >= max_rows) return;
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, g, g);
    return out;
}

struct StandardTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const {
        Partition s;
        for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return s;
    }
    int size() const {
        int g = 0;
        for (const auto& r : rows) g += static_cast<int>(r.size());
        return g;
    }
    std::vector<int> word() const {
        std::vector<int> w;
        for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
        return w;
    }
    std::vector<std::vector<int>> columns() const {
        std::vector<std::vector<int>> cols;
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size(); ++c) {
                if (cols.size() <= c) cols.emplace_back();
                cols[c].push_back(r[c]);
            }
        return cols;
    }
    std::pair<int, int> position(int entry) const {
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                if (rows[r][c] == entry) return {static_cast<int>(r), static_cast<int>(c)};
        throw Error("tableau entry not found");
    }
    StandardTableau relabeled(const std::vector<int>& labels) const {
        StandardTableau t = *this;
        for (auto& r : t.rows)
            for (auto& e : r) e = labels.at(e - 1);
        return t;
    }
    std::string str() const {
        std::string s = "[";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r) s += '|';
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                if (c) s += ' ';
                s += std::to_string(rows[r][c]);
            }
        }
        return s + "]";
    }
    friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows == b.rows; }
    friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
        auto sa = a.shape(), sb = b.shape();
        if (sa != sb) return sa > sb;
        return a.word() < b.word();
    }
};

// All standard tableaux of shape lambda filled with 1..g, in filling-word order.
inline std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
    int g = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (g < 1) throw Error("standard_tableaux: empty shape");
    for (std::size_t r = 1; r < lambda.size(); ++r)
        if (lambda[r] > lambda[r - 1] || lambda[r] < 1) throw Error("standard_tableaux: not a partition");
    std::vector<StandardTableau> out;
    StandardTableau t;
    t.rows.resize(lambda.size());
    // place entries 1..g successively; entry k may go at the end of row r when
    // the row is not full and the row above is strictly longer
    auto rec = [&](auto&& self, int k) -> void {
        if (k > g) { out.push_back(t); return; }
        for (std::size_t r = 0; r < lambda.size(); ++r) {
            int len = static_cast<int>(t.rows[r].size());
            if (len >= lambda[r]) continue;
            if (r > 0 && static_cast<int>(t.rows[r - 1].size()) <= len) continue;
            t.rows[r].push_back(k);
            self(self, k + 1);
            t.rows[r].pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// Tableaux of size g over all shapes with at most max_rows rows, in the global order.
inline std::vector<StandardTableau> standard_tableaux_of_size(int g, int max_rows = 1 << 20) {
    std::vector<StandardTableau> out;
    for (const auto& lam : partitions(g, max_rows)) {
        auto ts = standard_tableaux(lam);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

inline std::int64_t factorial(int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

class GroupAlgebraElement {
public:
    using Terms = std::map<Permutation, Rational>;

    GroupAlgebraElement() = default;
    GroupAlgebraElement(const Permutation& p, Rational c = 1) { add(p, c); }

    static GroupAlgebraElement unit(int g) { return GroupAlgebraElement(Permutation::identity(g)); }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int degree() const {
        int g = 0;
        for (const auto& [p, c] : terms_) g = std::max(g, p.degree());
        return g;
    }

    void add(const Permutation& p, Rational c) {
        if (c.numerator() == 0) return;
        auto [it, fresh] = terms_.try_emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second.numerator() == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Permutation& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        for (const auto& [p, c] : b.terms_) a.add(p, c);
        return a;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        for (const auto& [p, c] : b.terms_) a.add(p, -c);
        return a;
    }
    friend GroupAlgebraElement operator*(Rational s, GroupAlgebraElement a) {
        if (s.numerator() == 0) return {};
        for (auto& [p, c] : a.terms_) c *= s;
        return a;
    }
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        int g = std::max(a.degree(), b.degree());
        GroupAlgebraElement out;
        for (const auto& [p, c] : a.terms_)
            for (const auto& [q, d] : b.terms_) out.add((p * q).extended(g), c * d);
        return out;
    }
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return (a - b).empty();
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            if (!first) os << (c.numerator() < 0 ? " - " : " + ");
            else if (c.numerator() < 0) os << "-";
            first = false;
            Rational a = c.numerator() < 0 ? -c : c;
            if (a != Rational(1)) os << a.numerator() << (a.denominator() != 1 ? "/" + std::to_string(a.denominator()) : "") << "*";
            os << p.str();
        }
        return first ? "0" : os.str();
    }

private:
    Terms terms_;
};

namespace detail {

inline GroupAlgebraElement subgroup_sum(const std::vector<std::vector<int>>& blocks, int g, bool signed_sum) {
    GroupAlgebraElement out = GroupAlgebraElement::unit(g);
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        GroupAlgebraElement part;
        std::vector<int> perm = block;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<int> v(g);
            std::iota(v.begin(), v.end(), 1);
            auto sorted = block;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k < sorted.size(); ++k) v[sorted[k] - 1] = perm[k];
            Permutation p(std::move(v));
            part.add(p, signed_sum ? Rational(p.sign()) : Rational(1));
        } while (std::next_permutation(perm.begin(), perm.end()));
        out = out * part;
    }
    return out;
}

}  // namespace detail

// Row symmetrizer H and signed column antisymmetrizer V.
inline GroupAlgebraElement row_symmetrizer(const StandardTableau& t) {
    return detail::subgroup_sum(t.rows, t.size(), false);
}
inline GroupAlgebraElement column_antisymmetrizer(const StandardTableau& t) {
    return detail::subgroup_sum(t.columns(), t.size(), true);
}

// e = f H V with f = (#standard tableaux of the shape) / g!
inline GroupAlgebraElement young_symmetrizer(const StandardTableau& t) {
    const int g = t.size();
    const auto count = static_cast<std::int64_t>(standard_tableaux(t.shape()).size());
    Rational f(count, factorial(g));
    return f * (row_symmetrizer(t) * column_antisymmetrizer(t));
}

namespace detail {

// Signed axial distance from the box of a to the box of b: steps down or left
// count positive, up or right negative.
inline int axial_distance(const StandardTableau& t, int a, int b) {
    auto [ra, ca] = t.position(a);
    auto [rb, cb] = t.position(b);
    return (rb - ra) + (ca - cb);
}

inline StandardTableau swap_labels(StandardTableau t, int a, int b) {
    for (auto& r : t.rows)
        for (auto& e : r) {
            if (e == a) e = b;
            else if (e == b) e = a;
        }
    return t;
}

}  // namespace detail

// Idempotents P_tau. The first tableau of a shape uses its Young
// symmetrizer; a later tableau p uses f [d (a b) + e] P_q where q is the
// smallest-index earlier tableau of the same shape with tau_p = (a b) tau_q,
// b = a + 1, and f makes the result idempotent.
namespace detail {

// x*x = c*x for a rank-one x; returns c, or 0 when x is nilpotent or not of that form.
inline Rational square_ratio(const GroupAlgebraElement& x) {
    if (x.empty()) return Rational(0);
    const GroupAlgebraElement xx = x * x;
    const auto& [p0, c0] = *x.terms().begin();
    Rational c = xx.coefficient(p0) / c0;
    if (!(xx == c * x)) return Rational(0);
    return c;
}

inline GroupAlgebraElement young_projector_uncached(const StandardTableau& t,
                                                    const std::vector<StandardTableau>& same_shape,
                                                    std::size_t p);

inline GroupAlgebraElement young_projector_cached(const std::vector<StandardTableau>& same_shape, std::size_t p) {
    static std::mutex mu;
    static std::map<std::string, GroupAlgebraElement> cache;
    const std::string key = same_shape[p].str();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    GroupAlgebraElement out = young_projector_uncached(same_shape[p], same_shape, p);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

inline GroupAlgebraElement young_projector_uncached(const StandardTableau& t,
                                                    const std::vector<StandardTableau>& same_shape,
                                                    std::size_t p) {
    if (p == 0) return young_symmetrizer(t);
    const int g = t.size();
    for (std::size_t q = 0; q < p; ++q) {
        for (int a = 1; a < g; ++a) {
            if (!(swap_labels(same_shape[q], a, a + 1) == t)) continue;
            const int d = axial_distance(same_shape[q], a, a + 1);
            const GroupAlgebraElement step =
                Rational(d) * GroupAlgebraElement(Permutation::transposition(a, a + 1, g)) +
                GroupAlgebraElement::unit(g);
            const GroupAlgebraElement pq = young_projector_cached(same_shape, q);
            GroupAlgebraElement x = step * pq;
            Rational c = square_ratio(x);
            if (c.numerator() == 0) {
                // Left factor alone is nilpotent here; keep its image and close on the right.
                x = x * step;
                c = square_ratio(x);
            }
            if (c.numerator() == 0)
                throw Error("young_projector: normalization has no rational solution for " + t.str());
            return (Rational(1) / c) * x;
        }
    }
    throw Error("young_projector: no earlier tableau related by an adjacent transposition");
}

}  // namespace detail

// P_p = f [d (a b) + e] P_q with q the first earlier same-shape tableau one adjacent swap away.
inline GroupAlgebraElement young_projector(const StandardTableau& t) {
    const auto same_shape = standard_tableaux(t.shape());
    auto pos = std::find(same_shape.begin(), same_shape.end(), t);
    if (pos == same_shape.end()) throw Error("young_projector: not a standard tableau");
    return detail::young_projector_cached(same_shape, static_cast<std::size_t>(pos - same_shape.begin()));
}

// Index map of a permutation on a register of `count` digits in base `radix`,
// digit 1 being the most significant. The result m satisfies
// (sigma A)(x, y) = A(m[x], m[y]) for operators and (sigma v)(x) = v(m[x]) for tensors.
inline std::vector<int> digit_permutation(const Permutation& sigma, int count, int radix) {
    if (sigma.degree() > count) throw Error("act: permutation degree exceeds spin count");
    int dim = 1;
    for (int k = 0; k < count; ++k) dim *= radix;
    std::vector<int> weights(count);
    for (int k = count - 1, w = 1; k >= 0; --k, w *= radix) weights[k] = w;
    std::vector<int> map(dim);
    std::vector<int> digits(count);
    for (int x = 0; x < dim; ++x) {
        int r = x;
        for (int k = 0; k < count; ++k) { digits[k] = r / weights[k]; r %= weights[k]; }
        int y = 0;
        // new digit at position p is the old digit at position sigma(p)
        for (int p = 1; p <= count; ++p) y += digits[sigma(p) - 1] * weights[p - 1];
        map[x] = y;
    }
    return map;
}

// sigma(v_1 x ... x v_g) = v_{sigma^-1(1)} x ... x v_{sigma^-1(g)} on operator factors.
inline Operator act(const Permutation& sigma, const Operator& a, int n) {
    if (a.rows() != (Eigen::Index{1} << n)) throw Error("act: dimension does not match spin count");
    const auto m = digit_permutation(sigma, n, 2);
    Operator out(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) out(i, j) = a(m[i], m[j]);
    return out;
}

inline Operator act(const GroupAlgebraElement& x, const Operator& a, int n) {
    Operator out = Operator::Zero(a.rows(), a.cols());
    for (const auto& [p, c] : x.terms())
        out += boost::rational_cast<double>(c) * act(p, a, n);
    return out;
}

}  // namespace drops
