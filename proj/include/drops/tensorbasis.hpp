#pragma once

#include "clebsch.hpp"
#include "opalg.hpp"
#include "symgroup.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace drops {

// Droplet label (G, tau). tau is present exactly when |G| >= 3 and is filled with G.
struct DropLabel {
    std::vector<int> G;
    std::optional<StandardTableau> tau;
    std::optional<int> aux;  // reserved for duplicated (lambda, j) pairs at n >= 6

    int linearity() const { return static_cast<int>(G.size()); }

    // 1-based position of tau among the standard tableaux of size |G| (global order).
    int tableau_index() const {
        if (!tau) return 0;
        std::vector<int> inv(G.back() + 1, 0);
        for (std::size_t i = 0; i < G.size(); ++i) inv[G[i]] = static_cast<int>(i) + 1;
        StandardTableau plain = *tau;
        for (auto& r : plain.rows)
            for (auto& e : r) e = inv.at(e);
        const auto all = standard_tableaux_of_size(linearity(), 3);
        for (std::size_t k = 0; k < all.size(); ++k)
            if (all[k] == plain) return static_cast<int>(k) + 1;
        throw Error("label tableau not found among standard tableaux");
    }

    // "Id", "{1}", "{1,3}", "{1,2,3}(t2)"
    std::string str() const {
        if (G.empty()) return "Id";
        std::string s = "{";
        for (std::size_t i = 0; i < G.size(); ++i) s += (i ? "," : "") + std::to_string(G[i]);
        s += "}";
        if (tau) s += "(t" + std::to_string(tableau_index()) + ")";
        return s;
    }

    friend bool operator<(const DropLabel& a, const DropLabel& b) {
        if (a.G.size() != b.G.size()) return a.G.size() < b.G.size();
        if (a.G != b.G) return a.G < b.G;
        if (a.tau.has_value() != b.tau.has_value()) return !a.tau.has_value();
        if (a.tau && !(*a.tau == *b.tau)) return *a.tau < *b.tau;
        return a.aux < b.aux;
    }
    friend bool operator==(const DropLabel& a, const DropLabel& b) { return !(a < b) && !(b < a); }
};

// Label for subsystem G with tableau index t (1-based, global order of size |G|).
inline DropLabel make_label(std::vector<int> G, int t = 0) {
    std::sort(G.begin(), G.end());
    DropLabel l;
    l.G = G;
    if (G.size() >= 3) {
        const auto all = standard_tableaux_of_size(static_cast<int>(G.size()), 3);
        if (t < 1 || t > static_cast<int>(all.size())) throw Error("tableau index out of range");
        l.tau = all[t - 1].relabeled(G);
    } else if (t > 1) {
        throw Error("labels with fewer than three spins carry no tableau");
    }
    return l;
}

// Irreducible tensor family; comps[m + j] holds T_{j,m}.
struct LabeledTensorOp {
    DropLabel label;
    int j = 0;
    std::vector<Operator> comps;

    const Operator& operator[](int m) const { return comps.at(m + j); }
};

struct SingleSpinTensors {
    Operator t00;
    std::vector<Operator> t1;  // index m + 1
};

inline SingleSpinTensors single_spin_tensors() {
    SingleSpinTensors s;
    const double r = 1.0 / std::sqrt(2.0);
    s.t00 = Operator::Identity(2, 2) * r;
    Operator tm = Operator::Zero(2, 2), t0 = Operator::Zero(2, 2), tp = Operator::Zero(2, 2);
    tm(1, 0) = 1.0;
    t0(0, 0) = r;
    t0(1, 1) = -r;
    tp(0, 1) = -1.0;
    s.t1 = {tm, t0, tp};
    return s;
}

// Component family of rank j (index m + j) acting on `spins` spins.
struct Family {
    int j = 0;
    std::vector<Operator> comps;
};

// T_j (x) T_1 = T_{|j-1|} + ... + T_{j+1}, coupled with Clebsch-Gordan coefficients.
inline std::vector<Family> couple(const Family& parent) {
    const auto t1 = single_spin_tensors().t1;
    std::vector<Family> out;
    const int j = parent.j;
    const Eigen::Index dim = parent.comps.at(0).rows() * 2;
    for (int J = std::abs(j - 1); J <= j + 1; ++J) {
        Family f;
        f.j = J;
        for (int M = -J; M <= J; ++M) {
            Operator c = Operator::Zero(dim, dim);
            for (int m2 = -1; m2 <= 1; ++m2) {
                const int m1 = M - m2;
                if (std::abs(m1) > j) continue;
                const double cg = cg_twice(2 * j, 2 * m1, 2, 2 * m2, 2 * J, 2 * M);
                if (cg != 0.0) c += cg * kron(parent.comps[m1 + j], t1[m2 + 1]);
            }
            f.comps.push_back(std::move(c));
        }
        out.push_back(std::move(f));
    }
    return out;
}

// Iterated coupling chain of all g-linear families (not yet symmetrized).
inline std::vector<Family> coupling_chain(int g) {
    if (g < 1) throw Error("coupling_chain: g must be positive");
    std::vector<Family> cur{Family{1, single_spin_tensors().t1}};
    for (int k = 2; k <= g; ++k) {
        std::vector<Family> next;
        for (const auto& p : cur) {
            auto cs = couple(p);
            next.insert(next.end(), cs.begin(), cs.end());
        }
        cur = std::move(next);
    }
    return cur;
}

// Product of single-spin Pauli-type operators for an axis string over {x,y,z},
// used to define leading Cartesian coefficients.
inline Operator axis_product(const std::string& axes) {
    Operator out = Operator::Identity(1, 1);
    for (char a : axes) out = kron(out, spin_half(a));
    return out;
}

namespace detail {

inline double family_norm(const Family& f) { return std::sqrt(std::abs(frobenius(f.comps[f.j], f.comps[f.j]))); }

// Step (II) factors for g <= 3 applied to the unit-normalized projector images.
inline std::optional<cplx> small_g_phase(int g, int tableau, int j) {
    const cplx one = 1.0, mi = -I_unit;
    switch (g) {
        case 1: return one;
        case 2:
            if (j == 0) return -one;
            if (j == 1) return mi;
            return one;
        case 3:
            if (tableau == 4 && j == 0) return I_unit;
            if (tableau == 1 && j == 1) return -one;
            if ((tableau == 2 || tableau == 3) && j == 1) return one;
            if ((tableau == 2 || tableau == 3) && j == 2) return I_unit;
            if (tableau == 1 && j == 3) return one;
            return std::nullopt;
        default: return std::nullopt;
    }
}

// Convention for g >= 4: make T_{j,0} Hermitian, then make its first non-zero
// Cartesian coefficient (axis strings in x < y < z order) positive.
inline cplx large_g_phase(const Family& f, int g) {
    const Operator& t0 = f.comps[f.j];
    cplx phase = 1.0;
    if (max_abs(t0 - t0.adjoint()) <= 1e-10) phase = 1.0;
    else if (max_abs(t0 + t0.adjoint()) <= 1e-10) phase = I_unit;
    else throw Error("symmetrized family is neither Hermitian nor anti-Hermitian at m = 0");
    std::string axes(g, 'x');
    const char order[3] = {'x', 'y', 'z'};
    long total = 1;
    for (int k = 0; k < g; ++k) total *= 3;
    for (long idx = 0; idx < total; ++idx) {
        long r = idx;
        for (int k = g - 1; k >= 0; --k) { axes[k] = order[r % 3]; r /= 3; }
        const cplx c = phase * frobenius(axis_product(axes), t0);
        if (std::abs(c) > 1e-9) return c.real() > 0 ? phase : -phase;
    }
    throw Error("symmetrized family has vanishing m = 0 component");
}

}  // namespace detail

// Symmetrized g-linear family on g spins with tableau filled by 1..g.
struct GFamily {
    int tableau = 0;  // 1-based index in the global order of size-g tableaux (0 for g = 0)
    StandardTableau tau;
    Family fam;
};

// Steps (I) and (II): symmetrized, phase-fixed g-linear families acting on g spins.
inline std::vector<GFamily> symmetrized_families(int g) {
    std::vector<GFamily> out;
    if (g == 0) {
        GFamily gf;
        gf.fam = Family{0, {Operator::Identity(1, 1)}};
        out.push_back(gf);
        return out;
    }
    const auto chain = coupling_chain(g);
    const auto tableaux = standard_tableaux_of_size(g, 3);
    for (std::size_t t = 0; t < tableaux.size(); ++t) {
        const auto proj = young_projector(tableaux[t]);
        for (int j = 0; j <= g; ++j) {
            for (const auto& src : chain) {
                if (src.j != j) continue;
                const Operator probe = act(proj, src.comps[j], g);
                if (max_abs(probe) < 1e-9) continue;
                Family f;
                f.j = j;
                for (const auto& c : src.comps) f.comps.push_back(act(proj, c, g));
                const double nrm = detail::family_norm(f);
                for (auto& c : f.comps) c /= nrm;
                cplx phase;
                if (auto p = detail::small_g_phase(g, static_cast<int>(t) + 1, j)) phase = *p;
                else if (g <= 3) throw Error("no step (II) factor for this family");
                else phase = detail::large_g_phase(f, g);
                for (auto& c : f.comps) c *= phase;
                out.push_back(GFamily{static_cast<int>(t) + 1, tableaux[t], std::move(f)});
                break;
            }
        }
    }
    return out;
}

inline std::vector<std::vector<int>> subsets(int n, int g) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == g) { out.push_back(cur); return; }
        for (int k = start; k <= n; ++k) {
            cur.push_back(k);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Step (III): place a g-spin operator on subsystem G of n spins with T_00 factors elsewhere.
// The factor of spin i goes to G[i] (order preserving), equivalent to the
// transposition sequence (1 k1)(2 k2)... applied to T (x) T_00 (x) ...
inline Operator embed_subsystem(const Operator& t, const std::vector<int>& G, int n) {
    const int g = static_cast<int>(G.size());
    Operator full = kron(t, Operator::Identity(Eigen::Index{1} << (n - g), Eigen::Index{1} << (n - g)));
    full *= std::pow(1.0 / std::sqrt(2.0), n - g);
    std::vector<int> images(n);
    std::vector<bool> used(n + 1, false);
    for (int i = 0; i < g; ++i) { images[i] = G[i]; used[G[i]] = true; }
    int next = 1;
    for (int i = g; i < n; ++i) {
        while (used[next]) ++next;
        images[i] = next++;
    }
    return act(Permutation(images), full, n);
}

class LisaBasis {
public:
    int n = 0;
    std::vector<LabeledTensorOp> tensors;

    std::vector<DropLabel> labels() const {
        std::vector<DropLabel> out;
        for (const auto& t : tensors)
            if (out.empty() || !(out.back() == t.label)) out.push_back(t.label);
        return out;
    }

    std::map<DropLabel, std::vector<int>> droplet_index() const {
        std::map<DropLabel, std::vector<int>> idx;
        for (const auto& t : tensors) idx[t.label].push_back(t.j);
        return idx;
    }

    const LabeledTensorOp* find(const DropLabel& l, int j) const {
        for (const auto& t : tensors)
            if (t.j == j && t.label == l) return &t;
        return nullptr;
    }

    const Operator& component(const DropLabel& l, int j, int m) const {
        const auto* t = find(l, j);
        if (!t || std::abs(m) > j) throw Error("basis has no component " + l.str() + " j=" + std::to_string(j) + " m=" + std::to_string(m));
        return (*t)[m];
    }

    int dimension() const {
        int d = 0;
        for (const auto& t : tensors) d += 2 * t.j + 1;
        return d;
    }
};

inline LisaBasis build_lisa_basis(int n) {
    if (n < 1 || n > 5) throw Error("build_lisa_basis: n must be in 1..5");
    LisaBasis b;
    b.n = n;
    for (int g = 0; g <= n; ++g) {
        const auto fams = symmetrized_families(g);
        for (const auto& G : subsets(n, g)) {
            // families grouped by tableau, ranks ascending inside each label
            std::map<int, std::vector<const GFamily*>> by_tau;
            for (const auto& f : fams) by_tau[f.tableau].push_back(&f);
            if (g <= 2) {
                std::vector<const GFamily*> all;
                for (const auto& f : fams) all.push_back(&f);
                std::sort(all.begin(), all.end(), [](auto* a, auto* c) { return a->fam.j < c->fam.j; });
                by_tau.clear();
                by_tau[0] = all;
            }
            for (auto& [t, list] : by_tau) {
                std::sort(list.begin(), list.end(), [](auto* a, auto* c) { return a->fam.j < c->fam.j; });
                for (const auto* f : list) {
                    LabeledTensorOp op;
                    op.label = make_label(G, g >= 3 ? t : 0);
                    op.j = f->fam.j;
                    for (const auto& c : f->fam.comps) op.comps.push_back(embed_subsystem(c, G, n));
                    b.tensors.push_back(std::move(op));
                }
            }
        }
    }
    return b;
}

// Shared immutable bases, built on first use.
inline std::shared_ptr<const LisaBasis> lisa_basis(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const LisaBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto b = std::make_shared<const LisaBasis>(build_lisa_basis(n));
    cache[n] = b;
    return b;
}

// Largest deviation from the Racah conditions with J restricted to the label's spins.
inline double racah_deviation(const LabeledTensorOp& t, int n) {
    const Operator jz = total_spin('z', t.label.G, n);
    const Operator jp = total_spin('+', t.label.G, n);
    const Operator jm = total_spin('-', t.label.G, n);
    double dev = 0.0;
    for (int m = -t.j; m <= t.j; ++m) {
        dev = std::max(dev, max_abs(commutator(jz, t[m]) - double(m) * t[m]));
        const double up = std::sqrt(double(t.j * (t.j + 1) - m * (m + 1)));
        const double dn = std::sqrt(double(t.j * (t.j + 1) - m * (m - 1)));
        const Operator cp = commutator(jp, t[m]);
        const Operator cm = commutator(jm, t[m]);
        dev = std::max(dev, max_abs(m < t.j ? Operator(cp - up * t[m + 1]) : cp));
        dev = std::max(dev, max_abs(m > -t.j ? Operator(cm - dn * t[m - 1]) : cm));
    }
    return dev;
}

inline double condon_shortley_deviation(const LabeledTensorOp& t) {
    double dev = 0.0;
    for (int m = -t.j; m <= t.j; ++m)
        dev = std::max(dev, max_abs(t[m] - (m % 2 ? -1.0 : 1.0) * t[-m].adjoint()));
    return dev;
}

// ---------------------------------------------------------------------------
// Counting

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// n_j for the g-th tensor power of the rank-one space.
inline std::vector<std::int64_t> rank_multiplicities(int g) {
    std::vector<std::int64_t> cur{1};  // g = 0: one rank-0 copy
    for (int k = 1; k <= g; ++k) {
        std::vector<std::int64_t> next(cur.size() + 1, 0);
        for (std::size_t j = 0; j < cur.size(); ++j) {
            if (!cur[j]) continue;
            for (int J = std::abs(int(j) - 1); J <= int(j) + 1; ++J) next[J] += cur[j];
        }
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        cur = std::move(next);
    }
    return cur;
}

struct MultiplicityRow {
    int j;
    std::int64_t n_j;
    std::int64_t n_bar_j;
};

inline std::vector<MultiplicityRow> multiplicity_table(int n) {
    if (n < 1 || n > 8) throw Error("multiplicity_table: n must be in 1..8");
    std::vector<MultiplicityRow> rows;
    const auto top = rank_multiplicities(n);
    for (int j = 0; j <= n; ++j) {
        std::int64_t bar = 0;
        for (int g = 0; g <= n; ++g) {
            const auto mg = rank_multiplicities(g);
            if (j < static_cast<int>(mg.size())) bar += binomial(n, g) * mg[j];
        }
        rows.push_back({j, j < static_cast<int>(top.size()) ? top[j] : 0, bar});
    }
    return rows;
}

namespace detail {

// Ranks of the image of V_tau H_tau (first tableau of shape lambda) on each
// weight space of the g-fold tensor power of C^3. The image is a copy of the
// Schur module of shape lambda, so the rank differences give j multiplicities.
inline std::vector<int> shape_rank_multiplicities_by_weight(const Partition& lambda) {
    const int g = std::accumulate(lambda.begin(), lambda.end(), 0);
    const StandardTableau t = standard_tableaux(lambda).front();
    int dim = 1;
    for (int k = 0; k < g; ++k) dim *= 3;
    std::vector<int> pw(g);
    for (int k = g - 1, w = 1; k >= 0; --k, w *= 3) pw[k] = w;
    auto weight_of = [&](int x) {
        int w = 0;
        for (int k = 0; k < g; ++k) { w += 1 - (x / pw[k]) % 3; }
        return w;
    };

    // column antisymmetrizer terms
    std::vector<std::pair<std::vector<int>, int>> vterms;
    const GroupAlgebraElement v_tau = column_antisymmetrizer(t);
    for (const auto& [p, c] : v_tau.terms()) {
        vterms.emplace_back(digit_permutation(p.extended(g), g, 3), static_cast<int>(c.numerator()));
    }

    // row-symmetric basis vectors: one non-decreasing digit sequence per row
    std::map<int, std::vector<std::map<int, double>>> by_weight;
    std::vector<std::vector<int>> row_choice(t.rows.size());
    auto emit = [&]() {
        // expand all distinct arrangements inside each row
        std::map<int, double> vec;
        std::vector<std::vector<int>> arr(row_choice.begin(), row_choice.end());
        std::vector<int> digits(g);
        auto expand = [&](auto&& self, std::size_t r) -> void {
            if (r == arr.size()) {
                int x = 0;
                for (int k = 0; k < g; ++k) x += digits[k] * pw[k];
                for (const auto& [map, s] : vterms) vec[map[x]] += s;
                return;
            }
            std::vector<int> perm = arr[r];
            std::sort(perm.begin(), perm.end());
            do {
                for (std::size_t c = 0; c < perm.size(); ++c) digits[t.rows[r][c] - 1] = perm[c];
                self(self, r + 1);
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        expand(expand, 0);
        for (auto it = vec.begin(); it != vec.end();) it = (it->second == 0.0) ? vec.erase(it) : std::next(it);
        if (vec.empty()) return;
        by_weight[weight_of(vec.begin()->first)].push_back(std::move(vec));
    };
    auto choose = [&](auto&& self, std::size_t r) -> void {
        if (r == t.rows.size()) { emit(); return; }
        const int len = static_cast<int>(t.rows[r].size());
        std::vector<int> seq(len, 0);
        // enumerate non-decreasing sequences over {0,1,2}
        auto rec = [&](auto&& rself, int pos, int lo) -> void {
            if (pos == len) { row_choice[r] = seq; self(self, r + 1); return; }
            for (int d = lo; d < 3; ++d) { seq[pos] = d; rself(rself, pos + 1, d); }
        };
        rec(rec, 0, 0);
    };
    choose(choose, 0);

    std::vector<int> rank(g + 2, 0);
    for (auto& [w, vecs] : by_weight) {
        if (w < 0) continue;
        std::map<int, int> rows;
        for (const auto& v : vecs)
            for (const auto& [x, c] : v) rows.try_emplace(x, static_cast<int>(rows.size()));
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows.size(), vecs.size());
        for (std::size_t c = 0; c < vecs.size(); ++c)
            for (const auto& [x, val] : vecs[c]) m(rows[x], c) = val;
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
        qr.setThreshold(1e-9);
        rank[w] = static_cast<int>(qr.rank());
    }
    std::vector<int> mult(g + 1, 0);
    for (int j = 0; j <= g; ++j) mult[j] = rank[j] - rank[j + 1];
    return mult;
}

}  // namespace detail

struct SymmetryRankRow {
    Partition lambda;
    int tableau_count = 0;
    std::vector<int> ranks;  // multiset, ascending
};

// Rank content of each shape computed from weight-space ranks; valid for any g.
inline std::vector<SymmetryRankRow> symmetry_rank_rows_by_weight(int g) {
    std::vector<SymmetryRankRow> out;
    for (const auto& lam : partitions(g, 3)) {
        SymmetryRankRow row;
        row.lambda = lam;
        row.tableau_count = static_cast<int>(standard_tableaux(lam).size());
        const auto mult = detail::shape_rank_multiplicities_by_weight(lam);
        for (int j = 0; j <= g; ++j)
            for (int k = 0; k < mult[j]; ++k) row.ranks.push_back(j);
        out.push_back(row);
    }
    return out;
}

// Table of (lambda, #tau, ranks) by brute force: the first-tableau projector is
// applied to the 3^g-dimensional g-linear space and its image is split into
// eigenspaces of the Casimir J^2.
inline std::vector<SymmetryRankRow> symmetry_rank_table(int g) {
    if (g < 1 || g > 6) throw Error("symmetry_rank_table: supported for 1 <= g <= 6");
    int dim = 1;
    for (int k = 0; k < g; ++k) dim *= 3;
    std::vector<int> pw(g);
    for (int k = g - 1, w = 1; k >= 0; --k, w *= 3) pw[k] = w;

    // spin-one generators in the basis m = +1, 0, -1 (digits 0, 1, 2)
    Eigen::MatrixXd jz = Eigen::MatrixXd::Zero(dim, dim), jp = Eigen::MatrixXd::Zero(dim, dim);
    for (int x = 0; x < dim; ++x)
        for (int k = 0; k < g; ++k) {
            const int d = (x / pw[k]) % 3;
            jz(x, x) += 1 - d;
            if (d > 0) jp(x - pw[k], x) += std::sqrt(2.0);
        }
    const Eigen::MatrixXd casimir = jp.transpose() * jp + jz * jz + jz;

    std::vector<SymmetryRankRow> out;
    for (const auto& lam : partitions(g, 3)) {
        const auto ts = standard_tableaux(lam);
        const auto proj = young_projector(ts.front());
        Eigen::MatrixXd e = Eigen::MatrixXd::Zero(dim, dim);
        for (const auto& [p, c] : proj.terms()) {
            const auto map = digit_permutation(p.extended(g), g, 3);
            const double cd = boost::rational_cast<double>(c);
            for (int x = 0; x < dim; ++x) e(x, map[x]) += cd;
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(e);
        qr.setThreshold(1e-9);
        const int r = static_cast<int>(qr.rank());
        const Eigen::MatrixXd q = Eigen::MatrixXd(qr.householderQ()).leftCols(r);
        const Eigen::MatrixXd c = q.transpose() * casimir * q;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c);
        std::map<int, int> count;
        for (int k = 0; k < r; ++k) {
            const double ev = es.eigenvalues()(k);
            const int j = static_cast<int>(std::lround((-1.0 + std::sqrt(1.0 + 4.0 * ev)) / 2.0));
            if (std::abs(j * (j + 1) - ev) > 1e-6) throw Error("symmetry_rank_table: non-integral Casimir eigenvalue");
            ++count[j];
        }
        SymmetryRankRow row;
        row.lambda = lam;
        row.tableau_count = static_cast<int>(ts.size());
        for (const auto& [j, k] : count) {
            if (k % (2 * j + 1)) throw Error("symmetry_rank_table: incomplete multiplet");
            for (int i = 0; i < k / (2 * j + 1); ++i) row.ranks.push_back(j);
        }
        out.push_back(row);
    }
    return out;
}

// Number of labels (G, tau, duplicate index) for g-linear operators.
inline std::int64_t lisa_labels_per_subsystem(int g) {
    if (g <= 2) return 1;
    std::int64_t total = 0;
    for (const auto& row : symmetry_rank_rows_by_weight(g)) {
        std::map<int, int> c;
        int dup = 0;
        for (int j : row.ranks) dup = std::max(dup, ++c[j]);
        total += static_cast<std::int64_t>(row.tableau_count) * dup;
    }
    return total;
}

struct DropletBounds {
    std::int64_t minimum = 0, lisa = 0, maximum = 0;
};

inline DropletBounds droplet_bounds(int n) {
    if (n < 1 || n > 8) throw Error("droplet_bounds: n must be in 1..8");
    DropletBounds b;
    for (const auto& row : multiplicity_table(n)) {
        b.minimum = std::max(b.minimum, row.n_bar_j);
        b.maximum += row.n_bar_j;
    }
    for (int g = 0; g <= n; ++g) b.lisa += binomial(n, g) * lisa_labels_per_subsystem(g);
    return b;
}

// Group closure of a set of permutations on {1..n}, identity included.
inline std::vector<Permutation> group_closure(const std::vector<Permutation>& gens, int n) {
    std::vector<Permutation> out{Permutation::identity(n)};
    std::vector<Permutation> ext;
    for (const auto& g : gens) {
        if (g.degree() > n) throw Error("permutation degree exceeds the spin count");
        ext.push_back(g.extended(n));
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : ext) {
            Permutation p = g * out[i];
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
    return out;
}

struct RestrictedFamily {
    DropLabel label;  // smallest label of the orbit
    int j = 0;
    std::vector<Operator> comps;
    std::vector<DropLabel> sources;  // orbit members whose average this is

    const Operator& operator[](int m) const { return comps.at(m + j); }
};

struct RestrictedBasis {
    int n = 0;
    std::vector<RestrictedFamily> tensors;

    int dimension() const {
        int d = 0;
        for (const auto& t : tensors) d += 2 * t.j + 1;
        return d;
    }
    std::vector<DropLabel> labels() const {
        std::vector<DropLabel> out;
        for (const auto& t : tensors)
            if (std::find(out.begin(), out.end(), t.label) == out.end()) out.push_back(t.label);
        return out;
    }
};

// Group-averages every LISA family over the closure of `group` and keeps those
// averages that are nonzero and independent of the ones kept before, in basis order.
inline RestrictedBasis restrict_basis(const LisaBasis& basis, const std::vector<Permutation>& group, double tol = 1e-10) {
    const int n = basis.n;
    const auto elems = group_closure(group, n);
    RestrictedBasis out;
    out.n = n;
    std::map<int, std::vector<Eigen::VectorXcd>> kept;  // orthonormalized stacked components per rank
    for (const auto& t : basis.tensors) {
        std::vector<Operator> avg;
        for (int m = -t.j; m <= t.j; ++m) {
            Operator s = Operator::Zero(t[m].rows(), t[m].cols());
            for (const auto& p : elems) s += act(p, t[m], n);
            avg.push_back(s / static_cast<double>(elems.size()));
        }
        Eigen::VectorXcd v(static_cast<Eigen::Index>(avg.size()) * avg[0].size());
        for (std::size_t k = 0; k < avg.size(); ++k)
            v.segment(static_cast<Eigen::Index>(k) * avg[0].size(), avg[0].size()) =
                Eigen::Map<const Eigen::VectorXcd>(avg[k].data(), avg[k].size());
        Eigen::VectorXcd r = v;
        for (const auto& q : kept[t.j]) r -= q.dot(r) * q;
        if (r.norm() <= tol) continue;
        kept[t.j].push_back(r / r.norm());

        RestrictedFamily f;
        f.j = t.j;
        f.comps = std::move(avg);
        for (const auto& p : elems) {
            DropLabel img = t.label;
            for (auto& k : img.G) k = p(k);
            std::sort(img.G.begin(), img.G.end());
            const DropLabel l = make_label(img.G, t.label.tableau_index());
            if (std::find(f.sources.begin(), f.sources.end(), l) == f.sources.end()) f.sources.push_back(l);
        }
        std::sort(f.sources.begin(), f.sources.end());
        f.label = f.sources.front();
        out.tensors.push_back(std::move(f));
    }
    return out;
}

}  // namespace drops
