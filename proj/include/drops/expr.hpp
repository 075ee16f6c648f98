#pragma once

#include "opalg.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace drops {

// Parse failure with the byte offset of the offending token.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

// Grammar
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/')? unary)*        juxtaposition multiplies
//   unary   := ('+' | '-') unary | primary
//   primary := number | 'i' | 'sqrt' '(' expr ')' | '(' expr ')' | '[' expr ']' | symbol
//   symbol  := identifier, or T '[' j (',' m)? ']' ('{' spins? '}')? ('(t' k ')')?
//
// An Algebra supplies: value type V, scalar(cplx), add, sub, mul, neg,
// as_scalar(V) -> optional<cplx>, and symbol(name, offset).
template <class Algebra>
class ExprParser {
public:
    using V = typename Algebra::value;

    ExprParser(const std::string& text, Algebra& alg) : s_(text), alg_(alg) {}

    V parse() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        V v = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return v;
    }

private:
    const std::string& s_;
    Algebra& alg_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        skip();
        if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
        if (s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    V expr() {
        V v = term();
        while (true) {
            if (peek('+')) { ++pos_; v = alg_.add(v, term()); }
            else if (peek('-')) { ++pos_; v = alg_.sub(v, term()); }
            else return v;
        }
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '.';
    }

    V term() {
        V v = unary();
        while (true) {
            if (peek('*')) { ++pos_; v = alg_.mul(v, unary()); }
            else if (peek('/')) {
                const std::size_t at = ++pos_;
                V d = unary();
                auto sc = alg_.as_scalar(d);
                if (!sc) throw ParseError("division by a non-scalar", at);
                if (std::abs(*sc) == 0.0) throw ParseError("division by zero", at);
                v = alg_.mul(v, alg_.scalar(1.0 / *sc));
            } else if (starts_factor()) {
                v = alg_.mul(v, primary());
            } else {
                return v;
            }
        }
    }

    V unary() {
        if (peek('-')) { ++pos_; return alg_.neg(unary()); }
        if (peek('+')) { ++pos_; return unary(); }
        return primary();
    }

    V primary() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') { ++pos_; V v = expr(); expect(')'); return v; }
        if (c == '[') { ++pos_; V v = expr(); expect(']'); return v; }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return word();
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    V number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E') && pos_ + 1 < s_.size() &&
            (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '-' || s_[pos_ + 1] == '+')) {
            pos_ += 2;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        const std::string tok = s_.substr(start, pos_ - start);
        try {
            std::size_t used = 0;
            double d = std::stod(tok, &used);
            if (used != tok.size()) throw ParseError("malformed number '" + tok + "'", start);
            return alg_.scalar(d);
        } catch (const std::logic_error&) {
            throw ParseError("malformed number '" + tok + "'", start);
        }
    }

    V word() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (name == "i") return alg_.scalar(I_unit);
        if (name == "sqrt") {
            expect('(');
            const std::size_t at = pos_;
            V arg = expr();
            expect(')');
            auto sc = alg_.as_scalar(arg);
            if (!sc) throw ParseError("sqrt of a non-scalar", at);
            return alg_.scalar(std::sqrt(*sc));
        }
        if (name == "T" && pos_ < s_.size() && s_[pos_] == '[') {
            // keep the bracketed index, spin set and tableau suffix as part of the symbol
            auto grab = [&](char open, char close) {
                if (pos_ >= s_.size() || s_[pos_] != open) return;
                const std::size_t from = pos_;
                while (pos_ < s_.size() && s_[pos_] != close) ++pos_;
                if (pos_ >= s_.size()) throw ParseError(std::string("unterminated '") + open + "'", from);
                ++pos_;
                name += s_.substr(from, pos_ - from);
            };
            grab('[', ']');
            grab('{', '}');
            if (pos_ + 2 < s_.size() && s_[pos_] == '(' && s_[pos_ + 1] == 't' &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 2])))
                grab('(', ')');
        }
        return alg_.symbol(name, start);
    }
};

// Parsed tensor reference "T[j,m]{G}(tk)"; m is absent in family-level references.
struct TensorRef {
    int j = 0;
    std::optional<int> m;
    std::vector<int> G;
    int tableau = 0;
};

inline std::optional<TensorRef> parse_tensor_ref(const std::string& sym) {
    if (sym.size() < 4 || sym[0] != 'T' || sym[1] != '[') return std::nullopt;
    TensorRef r;
    std::size_t close = sym.find(']');
    if (close == std::string::npos) return std::nullopt;
    const std::string idx = sym.substr(2, close - 2);
    const std::size_t comma = idx.find(',');
    try {
        if (comma == std::string::npos) {
            r.j = std::stoi(idx);
        } else {
            r.j = std::stoi(idx.substr(0, comma));
            r.m = std::stoi(idx.substr(comma + 1));
        }
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
    std::size_t p = close + 1;
    if (p < sym.size() && sym[p] == '{') {
        const std::size_t end = sym.find('}', p);
        if (end == std::string::npos) return std::nullopt;
        std::string list = sym.substr(p + 1, end - p - 1);
        std::size_t q = 0;
        while (q < list.size()) {
            std::size_t e = list.find(',', q);
            if (e == std::string::npos) e = list.size();
            const std::string item = list.substr(q, e - q);
            if (!item.empty()) {
                try { r.G.push_back(std::stoi(item)); } catch (const std::logic_error&) { return std::nullopt; }
            }
            q = e + 1;
        }
        p = end + 1;
    }
    if (p < sym.size()) {
        if (sym.compare(p, 2, "(t") != 0 || sym.back() != ')') return std::nullopt;
        try { r.tableau = std::stoi(sym.substr(p + 2, sym.size() - p - 3)); } catch (const std::logic_error&) { return std::nullopt; }
    }
    return r;
}

// Cartesian product symbols: "I1z", "I1xI2y", or the three-spin shorthand "Ixyz".
// Returns (spin, axis) factors, or nothing if the name is not of that form.
inline std::optional<std::vector<std::pair<int, char>>> parse_cartesian_symbol(const std::string& sym) {
    auto is_axis = [](char c) { return c == 'x' || c == 'y' || c == 'z'; };
    std::vector<std::pair<int, char>> out;
    if (sym.size() >= 2 && sym[0] == 'I' && std::all_of(sym.begin() + 1, sym.end(), is_axis)) {
        for (std::size_t k = 1; k < sym.size(); ++k) out.emplace_back(static_cast<int>(k), sym[k]);
        return out;
    }
    std::size_t p = 0;
    while (p < sym.size()) {
        if (sym[p] != 'I') return std::nullopt;
        ++p;
        std::size_t q = p;
        while (q < sym.size() && std::isdigit(static_cast<unsigned char>(sym[q]))) ++q;
        if (q == p || q >= sym.size() || !is_axis(sym[q])) return std::nullopt;
        out.emplace_back(std::stoi(sym.substr(p, q - p)), sym[q]);
        p = q + 1;
    }
    if (out.empty()) return std::nullopt;
    return out;
}

// Linear combinations of named symbols with complex coefficients.
struct LinearCombination {
    cplx constant = 0.0;
    std::map<std::string, cplx> terms;
    bool scalar_only() const { return terms.empty(); }
};

struct LinearAlgebra {
    using value = LinearCombination;
    value scalar(cplx c) { return value{c, {}}; }
    value add(const value& a, const value& b) {
        value r = a;
        r.constant += b.constant;
        for (const auto& [k, v] : b.terms) r.terms[k] += v;
        return r;
    }
    value neg(const value& a) { return mul(a, scalar(-1.0)); }
    value sub(const value& a, const value& b) { return add(a, neg(b)); }
    value mul(const value& a, const value& b) {
        if (!a.scalar_only() && !b.scalar_only()) throw Error("product of two symbols in a linear expression");
        const value& s = a.scalar_only() ? a : b;
        const value& o = a.scalar_only() ? b : a;
        value r;
        r.constant = s.constant * o.constant;
        for (const auto& [k, v] : o.terms) r.terms[k] = s.constant * v;
        return r;
    }
    std::optional<cplx> as_scalar(const value& v) {
        if (v.scalar_only()) return v.constant;
        return std::nullopt;
    }
    value symbol(const std::string& name, std::size_t) {
        value r;
        r.terms[name] = 1.0;
        return r;
    }
};

inline LinearCombination parse_linear(const std::string& text) {
    LinearAlgebra alg;
    return ExprParser<LinearAlgebra>(text, alg).parse();
}

}  // namespace drops
