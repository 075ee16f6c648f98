#pragma once

#include "expr.hpp"
#include "tables_data.hpp"
#include "tensorbasis.hpp"

#include <functional>

namespace drops {

// Product of single-spin operators I_{k,axis}; spins not listed carry identities.
struct ProductOpSpec {
    std::map<int, char> factors;
};

// Plain product I_{k1 a1} I_{k2 a2} ... without prefactor.
inline Operator cartesian_product(const std::vector<std::pair<int, char>>& factors, int n) {
    std::vector<Operator> f(n, spin_half('1'));
    std::vector<bool> used(n + 1, false);
    for (const auto& [k, a] : factors) {
        if (k < 1 || k > n) throw Error("product operator: spin " + std::to_string(k) + " outside 1.." + std::to_string(n));
        if (used[k]) throw Error("product operator: duplicate spin index " + std::to_string(k));
        used[k] = true;
        f[k - 1] = spin_half(a);
    }
    return kron_all(f);
}

// 2^{d-1} I_{k1 a1} ... I_{kd ad}
inline Operator product_op(const ProductOpSpec& spec, int n) {
    if (spec.factors.empty()) throw Error("product operator needs at least one factor");
    std::vector<std::pair<int, char>> f(spec.factors.begin(), spec.factors.end());
    return std::pow(2.0, static_cast<double>(f.size()) - 1.0) * cartesian_product(f, n);
}

// Coefficient of the plain product I_{k1 a1} ... (no prefactor) in a; empty factors
// give the identity coefficient.
inline cplx product_coefficient(const Operator& a, const std::vector<std::pair<int, char>>& factors, int n) {
    const Operator p = factors.empty() ? identity(n) : cartesian_product(factors, n);
    return frobenius(p, a) / frobenius(p, p);
}

enum class Direction { to_lisa, from_lisa };

using Matrix3c = Eigen::Matrix<cplx, 3, 3>;
using Matrix9c = Eigen::Matrix<cplx, 9, 9>;

// Rows T_{1,-1}, T_{1,0}, T_{1,1} against columns I_kx, I_ky, I_kz (to_lisa) and the inverse.
inline Matrix3c linear_transform(Direction dir, int k, int n) {
    if (k < 1 || k > n) throw Error("linear_transform: spin out of range");
    const double r2 = std::sqrt(2.0);
    const cplx i = I_unit;
    Matrix3c m;
    if (dir == Direction::to_lisa) {
        m << 1.0, -i, 0.0,
             0.0, 0.0, r2,
             -1.0, -i, 0.0;
        return std::pow(1.0 / r2, n - 1) * m;
    }
    m << 0.5, 0.0, -0.5,
         i / 2.0, 0.0, i / 2.0,
         0.0, 1.0 / r2, 0.0;
    return std::pow(r2, n - 1) * m;
}

// Rows T_{0,0}, T_{1,-1..1}, T_{2,-2..2} of {k,l} against columns 2 I_ka I_lb
// ordered xx, xy, xz, yx, ..., zz (to_lisa), and the inverse.
inline Matrix9c bilinear_transform(Direction dir, int k, int l, int n) {
    if (!(1 <= k && k < l && l <= n)) throw Error("bilinear_transform: need 1 <= k < l <= n");
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
    const cplx i = I_unit;
    const cplx h = 0.5, ih = i / 2.0;
    Matrix9c m;
    if (dir == Direction::to_lisa) {
        m << 1 / r3, 0, 0, 0, 1 / r3, 0, 0, 0, 1 / r3,
             0, 0, ih, 0, 0, h, -ih, -h, 0,
             0, 1 / r2, 0, -1 / r2, 0, 0, 0, 0, 0,
             0, 0, ih, 0, 0, -h, -ih, h, 0,
             h, -ih, 0, -ih, -h, 0, 0, 0, 0,
             0, 0, h, 0, 0, -ih, h, -ih, 0,
             -1 / r6, 0, 0, 0, -1 / r6, 0, 0, 0, 2 / r6,
             0, 0, -h, 0, 0, -ih, -h, -ih, 0,
             h, ih, 0, ih, -h, 0, 0, 0, 0;
        return std::pow(1.0 / r2, n - 2) * m;
    }
    m << 1 / r3, 0, 0, 0, h, 0, -1 / r6, 0, h,
         0, 0, 1 / r2, 0, ih, 0, 0, 0, -ih,
         0, -ih, 0, -ih, 0, h, 0, -h, 0,
         0, 0, -1 / r2, 0, ih, 0, 0, 0, -ih,
         1 / r3, 0, 0, 0, -h, 0, -1 / r6, 0, -h,
         0, h, 0, -h, 0, ih, 0, ih, 0,
         0, ih, 0, ih, 0, h, 0, -h, 0,
         0, -h, 0, h, 0, ih, 0, ih, 0,
         1 / r3, 0, 0, 0, 0, 0, r2 / r3, 0, 0;
    return std::pow(r2, n - 2) * m;
}

// Operator for one table symbol: Cartesian products or LISA components "T[j,m]{G}(tk)".
// Family-level references "T[j]{G}" take the component m supplied by the caller.
inline Operator resolve_symbol(const std::string& sym, const LisaBasis& basis, std::optional<int> m = std::nullopt) {
    if (auto f = parse_cartesian_symbol(sym)) return cartesian_product(*f, basis.n);
    if (auto r = parse_tensor_ref(sym)) {
        const int mm = r->m ? *r->m : (m ? *m : 0);
        if (!r->m && !m) throw Error("family-level tensor '" + sym + "' used without a component");
        if (std::abs(mm) > r->j) return Operator::Zero(Eigen::Index{1} << basis.n, Eigen::Index{1} << basis.n);
        return basis.component(make_label(r->G, r->tableau), r->j, mm);
    }
    throw Error("unknown symbol '" + sym + "'");
}

inline Operator evaluate(const LinearCombination& lc, const std::function<Operator(const std::string&)>& resolve, int n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    Operator out = lc.constant * Operator::Identity(d, d);
    for (const auto& [sym, c] : lc.terms) out += c * resolve(sym);
    return out;
}

inline Operator evaluate(const std::string& text, const LisaBasis& basis, std::optional<int> m = std::nullopt) {
    return evaluate(parse_linear(text), [&](const std::string& s) { return resolve_symbol(s, basis, m); }, basis.n);
}

struct CoefficientTable {
    std::vector<std::string> rows;
    std::map<std::string, std::map<std::string, cplx>> entries;
};

struct TrilinearTables {
    CoefficientTable lisa_to_cartesian;   // T_{j,m}(tau) rows over Iabc columns
    CoefficientTable cartesian_to_lisa;   // 4 Iabc rows over T_{j,m}(tau) columns
};

inline CoefficientTable coefficient_table(const tables::Row* begin, const tables::Row* end) {
    CoefficientTable t;
    for (auto r = begin; r != end; ++r) {
        const std::string key(r->lhs);
        const LinearCombination lc = parse_linear(std::string(r->rhs));
        if (std::abs(lc.constant) != 0.0) throw Error("table row " + key + " has a constant term");
        t.rows.push_back(key);
        for (const auto& [sym, c] : lc.terms)
            if (std::abs(c) > 0.0) t.entries[key][sym] = c;
    }
    return t;
}

inline const TrilinearTables& trilinear_tables() {
    static const TrilinearTables t = [] {
        TrilinearTables out;
        const auto& a = tables::trilinear_to_cartesian;
        const auto& b = tables::cartesian_to_trilinear;
        out.lisa_to_cartesian = coefficient_table(a.data(), a.data() + a.size());
        out.cartesian_to_lisa = coefficient_table(b.data(), b.data() + b.size());
        return out;
    }();
    return t;
}

// Operator of a table row key: "T[j,m]{1,2,3}(tk)" or "Iabc" (standing for 4 Iabc).
inline Operator table_row_operator(const std::string& key, const LisaBasis& basis) {
    if (auto f = parse_cartesian_symbol(key)) return 4.0 * cartesian_product(*f, basis.n);
    return resolve_symbol(key, basis);
}

// Largest entrywise deviation of a coefficient table from the basis; the tables are
// stated for three spins and pick up (1/sqrt 2)^{n-3} per LISA component beyond that.
inline double table_deviation(const CoefficientTable& t, const LisaBasis& basis) {
    if (basis.n < 3) throw Error("trilinear tables need at least three spins");
    const double lisa_scale = std::pow(1.0 / std::sqrt(2.0), basis.n - 3);
    double dev = 0.0;
    for (const auto& key : t.rows) {
        const bool row_is_lisa = key[0] == 'T';
        Operator rhs = Operator::Zero(Eigen::Index{1} << basis.n, Eigen::Index{1} << basis.n);
        auto it = t.entries.find(key);
        if (it != t.entries.end())
            for (const auto& [sym, c] : it->second) rhs += c * resolve_symbol(sym, basis);
        Operator lhs = table_row_operator(key, basis);
        if (row_is_lisa) rhs *= lisa_scale;
        else lhs *= lisa_scale;
        dev = std::max(dev, max_abs(lhs - rhs));
    }
    return dev;
}

}  // namespace drops
