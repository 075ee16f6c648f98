#pragma once

#include "cartesian.hpp"
#include "clebsch.hpp"
#include "dynamics.hpp"

namespace drops {

// A block |kappa, j> of coupled states. kappa is the parent rank (twice its value
// is never needed: parents of spin-1/2 chains have integer or half-integer ranks and
// are stored doubled), or -1 when j occurs once.
struct StateBlock {
    int kappa2 = -1;  // twice the parent rank, -1 when unlabeled
    int j2 = 0;       // twice the rank

    friend auto operator<=>(const StateBlock&, const StateBlock&) = default;
};

struct CoupledState {
    StateBlock block;
    int m2 = 0;  // twice the order
    Eigen::VectorXcd amplitudes;
};

struct CoupledBasis {
    int n = 0;
    std::vector<StateBlock> blocks;   // ordered: larger j first, then larger parent rank
    std::vector<CoupledState> states; // grouped by block, m descending

    const CoupledState& state(const StateBlock& b, int m2) const {
        for (const auto& s : states)
            if (s.block == b && s.m2 == m2) return s;
        throw Error("coupled basis has no such state");
    }
};

namespace detail {

struct RawState {
    int parent2;  // twice the rank of the n-1 spin parent, -1 for n = 1
    int j2, m2;
    Eigen::VectorXcd v;
};

inline std::vector<RawState> couple_states(int n) {
    std::vector<RawState> cur = {{-1, 1, 1, basis_ket("0")}, {-1, 1, -1, basis_ket("1")}};
    for (int k = 2; k <= n; ++k) {
        std::vector<RawState> next;
        // distinct (parent block) groups of the previous level
        std::vector<std::pair<int, int>> groups;
        for (const auto& s : cur)
            if (std::find(groups.begin(), groups.end(), std::pair{s.parent2, s.j2}) == groups.end())
                groups.emplace_back(s.parent2, s.j2);
        for (const auto& [pp, pj] : groups) {
            for (int J = pj + 1; J >= std::abs(pj - 1); J -= 2) {
                for (int M = J; M >= -J; M -= 2) {
                    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << k);
                    for (const auto& s : cur) {
                        if (s.parent2 != pp || s.j2 != pj) continue;
                        for (int ms : {1, -1}) {
                            const double c = cg_twice(pj, s.m2, 1, ms, J, M);
                            if (c == 0.0) continue;
                            v += c * kron(Operator(s.v), Operator(basis_ket(ms == 1 ? "0" : "1")));
                        }
                    }
                    next.push_back({pj, J, M, v});
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace detail

// Coupled angular-momentum states built by adding one spin at a time with
// Condon-Shortley Clebsch-Gordan coefficients. Blocks carry the parent rank as
// kappa only when their rank occurs more than once.
inline CoupledBasis coupled_basis(int n) {
    if (n < 1 || n > 3) throw Error("coupled_basis: n must be in 1..3");
    const auto raw = detail::couple_states(n);
    std::map<int, int> count;
    std::vector<std::pair<int, int>> seen;
    for (const auto& s : raw)
        if (std::find(seen.begin(), seen.end(), std::pair{s.parent2, s.j2}) == seen.end()) {
            seen.emplace_back(s.parent2, s.j2);
            ++count[s.j2];
        }
    CoupledBasis b;
    b.n = n;
    for (const auto& s : raw) {
        StateBlock blk{count[s.j2] > 1 ? s.parent2 : -1, s.j2};
        if (std::find(b.blocks.begin(), b.blocks.end(), blk) == b.blocks.end()) b.blocks.push_back(blk);
        b.states.push_back({blk, s.m2, s.v});
    }
    std::stable_sort(b.blocks.begin(), b.blocks.end(), [](const StateBlock& x, const StateBlock& y) {
        if (x.j2 != y.j2) return x.j2 > y.j2;
        return x.kappa2 > y.kappa2;
    });
    return b;
}

// "|3/2>", "|k1,1/2>" where k1, k2, ... number the kappa values in descending order.
inline std::string block_name(const StateBlock& b, const CoupledBasis& basis) {
    auto half = [](int t) { return t % 2 ? std::to_string(t) + "/2" : std::to_string(t / 2); };
    if (b.kappa2 < 0) return "|" + half(b.j2) + ">";
    int idx = 1;
    for (const auto& o : basis.blocks)
        if (o.j2 == b.j2 && o.kappa2 > b.kappa2) ++idx;
    return "|k" + std::to_string(idx) + "," + half(b.j2) + ">";
}

struct MultipoleLabel {
    StateBlock from;
    StateBlock to;

    friend auto operator<=>(const MultipoleLabel&, const MultipoleLabel&) = default;
};

struct MultipoleTensor {
    MultipoleLabel label;
    int j = 0;
    std::vector<Operator> comps;  // index m + j

    const Operator& operator[](int m) const { return comps.at(m + j); }
};

struct MultipoleBasis {
    int n = 0;
    CoupledBasis states;
    std::vector<MultipoleTensor> tensors;

    std::vector<MultipoleLabel> labels() const {
        std::vector<MultipoleLabel> out;
        for (const auto& t : tensors)
            if (out.empty() || !(out.back() == t.label)) out.push_back(t.label);
        return out;
    }
    const MultipoleTensor* find(const MultipoleLabel& l, int j) const {
        for (const auto& t : tensors)
            if (t.j == j && t.label == l) return &t;
        return nullptr;
    }
    std::string name(const MultipoleLabel& l) const {
        return block_name(l.from, states) + "->" + block_name(l.to, states);
    }
};

// sqrt((2j+1)/(2j2+1)) sum <j1 m1; j m | j2 m2> |kappa_q j2 m2><kappa_p j1 m1|
inline MultipoleTensor multipole_tensor(const CoupledBasis& cb, const MultipoleLabel& label, int j) {
    const int j1 = label.from.j2, j2 = label.to.j2;
    if (2 * j < std::abs(j1 - j2) || 2 * j > j1 + j2) throw Error("multipole_tensor: rank outside the transition's range");
    const Eigen::Index d = Eigen::Index{1} << cb.n;
    MultipoleTensor t;
    t.label = label;
    t.j = j;
    const double pref = std::sqrt((2.0 * j + 1.0) / (j2 + 1.0));
    for (int m = -j; m <= j; ++m) {
        Operator op = Operator::Zero(d, d);
        for (int m1 = -j1; m1 <= j1; m1 += 2) {
            const int m2 = m1 + 2 * m;
            if (std::abs(m2) > j2) continue;
            const double c = cg_twice(j1, m1, 2 * j, 2 * m, j2, m2);
            if (c == 0.0) continue;
            op += pref * c * cb.state(label.to, m2).amplitudes * cb.state(label.from, m1).amplitudes.adjoint();
        }
        t.comps.push_back(std::move(op));
    }
    return t;
}

inline MultipoleBasis build_multipole_basis(int n) {
    MultipoleBasis b;
    b.n = n;
    b.states = coupled_basis(n);
    for (const auto& p : b.states.blocks)
        for (const auto& q : b.states.blocks)
            for (int j2 = std::abs(p.j2 - q.j2); j2 <= p.j2 + q.j2; j2 += 2)
                b.tensors.push_back(multipole_tensor(b.states, {p, q}, j2 / 2));
    return b;
}

inline std::shared_ptr<const MultipoleBasis> multipole_basis(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const MultipoleBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto b = std::make_shared<const MultipoleBasis>(build_multipole_basis(n));
    cache[n] = b;
    return b;
}

// Irreducible state blocks of n spins with multiplicity, by repeated coupling with spin 1/2.
inline std::map<int, std::int64_t> state_rank_multiplicities(int n) {
    if (n < 1) throw Error("state_rank_multiplicities: n must be positive");
    std::map<int, std::int64_t> mult{{1, 1}};
    for (int k = 2; k <= n; ++k) {
        std::map<int, std::int64_t> next;
        for (const auto& [j2, c] : mult) {
            next[j2 + 1] += c;
            if (j2 >= 1) next[j2 - 1] += c;
        }
        mult = std::move(next);
    }
    return mult;
}

inline std::int64_t multipole_droplet_count(int n) {
    if (n < 1 || n > 8) throw Error("multipole_droplet_count: n must be in 1..8");
    std::int64_t blocks = 0;
    for (const auto& [j2, c] : state_rank_multiplicities(n)) blocks += c;
    return blocks * blocks;
}

// Multipole table keys "j|from|to" with blocks named 3/2, k1, k2 (three spins).
inline MultipoleLabel multipole_label_from_key(const std::string& from, const std::string& to, const CoupledBasis& cb) {
    auto block = [&](const std::string& s) -> StateBlock {
        for (const auto& b : cb.blocks) {
            const std::string nm = block_name(b, cb);
            if (s == "3/2" && nm == "|3/2>") return b;
            if (s.size() == 2 && s[0] == 'k' && nm.rfind("|" + s + ",", 0) == 0) return b;
        }
        throw Error("unknown state block '" + s + "'");
    };
    return {block(from), block(to)};
}

// Table rows whose printed sign of one trilinear term disagrees with the constructed
// tensors (the same three factors where the trilinear tables and the "before"
// column of the symmetrization table disagree, plus the rank-1 |3/2> row).
struct SignConflict {
    const char* key;
    const char* symbol;
};

inline constexpr std::array<SignConflict, 7> multipole_sign_conflicts{{
    {"1|3/2|3/2", "T[1]{1,2,3}(t1)"},
    {"2|3/2|k1", "T[2]{1,2,3}(t2)"},
    {"2|k1|3/2", "T[2]{1,2,3}(t2)"},
    {"2|3/2|k2", "T[2]{1,2,3}(t3)"},
    {"2|k2|3/2", "T[2]{1,2,3}(t3)"},
    {"0|k1|k2", "T[0]{1,2,3}(t4)"},
    {"0|k2|k1", "T[0]{1,2,3}(t4)"},
}};

inline const char* multipole_conflict_symbol(const std::string& key) {
    for (const auto& c : multipole_sign_conflicts)
        if (key == c.key) return c.symbol;
    return nullptr;
}

// Deviation of one multipole table row over all components m; negate names a
// symbol whose printed coefficient is flipped before comparing.
inline double multipole_row_deviation(const tables::Row& row, const MultipoleBasis& mb, const LisaBasis& lisa,
                                      const char* negate = nullptr) {
    if (mb.n != 3 || lisa.n != 3) throw Error("multipole table is stated for three spins");
    const std::string key(row.lhs);
    const auto p1 = key.find('|'), p2 = key.find('|', p1 + 1);
    const int j = std::stoi(key.substr(0, p1));
    const auto label = multipole_label_from_key(key.substr(p1 + 1, p2 - p1 - 1), key.substr(p2 + 1), mb.states);
    const auto* t = mb.find(label, j);
    if (!t) throw Error("multipole basis lacks " + key);
    LinearCombination lc = parse_linear(std::string(row.rhs));
    if (negate) {
        auto it = lc.terms.find(negate);
        if (it == lc.terms.end()) throw Error("row " + key + " has no term " + negate);
        it->second = -it->second;
    }
    double dev = 0.0;
    for (int m = -j; m <= j; ++m) {
        const Operator rhs = evaluate(lc, [&](const std::string& s) { return resolve_symbol(s, lisa, m); }, 3);
        dev = std::max(dev, max_abs((*t)[m] - rhs));
    }
    return dev;
}

// Largest deviation between the multipole tensors and their printed LISA expansions.
inline double multipole_table_deviation(const MultipoleBasis& mb, const LisaBasis& lisa) {
    double dev = 0.0;
    for (const auto& row : tables::multipole_to_lisa) dev = std::max(dev, multipole_row_deviation(row, mb, lisa));
    return dev;
}

}  // namespace drops
