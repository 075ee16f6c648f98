#pragma once

#include "cartesian.hpp"
#include "dynamics.hpp"

namespace drops {

// Symbols understood by parse_operator for n spins:
//   I1z, I2x, I1xI2y     single and product Cartesian operators (no 2^{d-1} prefactor)
//   Ixyz                 spin-order shorthand for I1x I2y I3z
//   Fx, Fy, Fz           total spin components
//   Id                   identity
//   T[j,m]{G}(tk)        LISA basis components
//   GHZ, W, PhiPlus, PhiMinus, PsiPlus, PsiMinus, zero, partial
//                        density matrices of named pure states
struct OperatorAlgebra {
    struct value {
        std::optional<cplx> scalar;
        Operator op;
    };

    int n;
    const LisaBasis* basis = nullptr;

    Operator as_operator(const value& v) const {
        if (v.scalar) return *v.scalar * identity(n);
        return v.op;
    }

    value scalar(cplx c) { return {c, {}}; }
    value add(const value& a, const value& b) {
        if (a.scalar && b.scalar) return scalar(*a.scalar + *b.scalar);
        return {std::nullopt, as_operator(a) + as_operator(b)};
    }
    value neg(const value& a) { return mul(a, scalar(-1.0)); }
    value sub(const value& a, const value& b) { return add(a, neg(b)); }
    value mul(const value& a, const value& b) {
        if (a.scalar && b.scalar) return scalar(*a.scalar * *b.scalar);
        if (a.scalar) return {std::nullopt, *a.scalar * b.op};
        if (b.scalar) return {std::nullopt, a.op * *b.scalar};
        return {std::nullopt, a.op * b.op};
    }
    std::optional<cplx> as_scalar(const value& v) { return v.scalar; }

    value symbol(const std::string& name, std::size_t offset) {
        try {
            return {std::nullopt, resolve(name)};
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), offset);
        }
    }

private:
    Operator need_spins(int want, const std::string& name, const Operator& a) const {
        if (n != want) throw Error("'" + name + "' is a " + std::to_string(want) + "-spin state but n = " + std::to_string(n));
        return a;
    }

    Operator resolve(const std::string& name) const {
        if (name == "Id") return identity(n);
        if (name == "Fx" || name == "Fy" || name == "Fz") return total_spin(name[1], n);
        if (name == "zero") return named_state("zero-product", n);
        if (name == "GHZ") return need_spins(3, name, named_state("GHZ"));
        if (name == "W") return need_spins(3, name, named_state("W"));
        if (name == "PhiPlus") return need_spins(2, name, named_state("phi+"));
        if (name == "PhiMinus") return need_spins(2, name, named_state("phi-"));
        if (name == "PsiPlus") return need_spins(2, name, named_state("psi+"));
        if (name == "PsiMinus") return need_spins(2, name, named_state("psi-"));
        if (name == "partial") return need_spins(2, name, named_state("partial-entangled-example"));
        if (auto f = parse_cartesian_symbol(name)) return cartesian_product(*f, n);
        if (auto r = parse_tensor_ref(name)) {
            if (!r->m) throw Error("tensor '" + name + "' needs a component index m");
            if (!basis) throw Error("tensor symbols need a LISA basis");
            if (std::abs(*r->m) > r->j) throw Error("tensor '" + name + "' has |m| > j");
            for (int k : r->G)
                if (k < 1 || k > n) throw Error("tensor '" + name + "' names a spin outside 1.." + std::to_string(n));
            const DropLabel l = make_label(r->G, r->tableau);
            if (!basis->find(l, r->j)) throw Error("no basis tensor '" + name + "'");
            return basis->component(l, r->j, *r->m);
        }
        throw Error("unknown symbol '" + name + "'");
    }
};

inline Operator parse_operator(const std::string& text, int n) {
    if (n < 1 || n > 5) throw Error("parse_operator: n must be in 1..5");
    OperatorAlgebra alg{n, lisa_basis(n).get()};
    auto v = ExprParser<OperatorAlgebra>(text, alg).parse();
    return alg.as_operator(v);
}

}  // namespace drops
