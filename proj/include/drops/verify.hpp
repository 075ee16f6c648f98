#pragma once

#include "count_tables.hpp"
#include "multipole.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace drops {

struct Check {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double tol = 0.0;
    std::string detail;
    bool note = false;  // documented conflict, reported but not counted as a failure
};

struct VerifyOptions {
    int max_n = 3;
    int samples = 50;
    // strict: every printed table row must reproduce; otherwise rows with a
    // documented sign conflict are checked with that sign flipped and reported as notes
    bool strict = false;
};

namespace detail {

inline Check within(std::string name, double value, double tol, std::string detail = {}) {
    return {std::move(name), value <= tol, value, tol, std::move(detail)};
}

inline Check equal(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok, ok ? 0.0 : 1.0, 0.0, std::move(detail)};
}

inline Operator random_operator(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    const Eigen::Index d = Eigen::Index{1} << n;
    Operator a(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) a(r, c) = cplx(g(rng), g(rng));
    return a;
}

inline Operator random_density(int n, std::mt19937_64& rng) {
    const Operator a = random_operator(n, rng);
    Operator rho = a * a.adjoint();
    return rho / rho.trace();
}

inline Eigen::VectorXcd random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = cplx(g(rng), g(rng));
    return v.normalized();
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(4) << v;
    return os.str();
}

inline std::string fmt(cplx v) {
    std::ostringstream os;
    os << std::setprecision(4) << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    return os.str();
}

}  // namespace detail

// Independent concurrence of a pure two-spin state: |<psi| sigma_y sigma_y |psi*>|.
inline double spin_flip_concurrence(const Eigen::VectorXcd& psi) {
    if (psi.size() != 4) throw Error("spin_flip_concurrence: needs a two-spin state");
    const Eigen::VectorXcd v = psi.normalized();
    Operator sy(2, 2);
    sy << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
    const Operator yy = kron(sy, sy);
    return std::abs((v.transpose() * yy * v)(0, 0));
}

inline std::vector<Check> verify_basis(const VerifyOptions& opt) {
    std::vector<Check> out;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= opt.max_n; ++n) {
        const LisaBasis b = build_lisa_basis(n);
        double racah = 0.0, cs = 0.0, orth = 0.0;
        std::vector<const Operator*> comps;
        for (const auto& t : b.tensors) {
            racah = std::max(racah, racah_deviation(t, n));
            cs = std::max(cs, condon_shortley_deviation(t));
            for (const auto& c : t.comps) comps.push_back(&c);
        }
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t k = i; k < comps.size(); ++k)
                orth = std::max(orth, std::abs(frobenius(*comps[i], *comps[k]) - (i == k ? 1.0 : 0.0)));
        const std::string tag = "n=" + std::to_string(n);
        out.push_back(detail::within("racah commutators " + tag, racah, 1e-10));
        out.push_back(detail::within("condon-shortley conjugation " + tag, cs, 1e-12));
        out.push_back(detail::within("orthonormality " + tag, orth, 1e-10));
        out.push_back(detail::equal("component count " + tag, comps.size() == (std::size_t{1} << (2 * n)),
                                    std::to_string(comps.size()) + " components"));
    }
    out.push_back(detail::within("runtime (s)", detail::seconds_since(t0), 5.0));
    return out;
}

inline std::vector<Check> verify_tables(const VerifyOptions& opt) {
    std::vector<Check> out;
    const char axes[3] = {'x', 'y', 'z'};
    double lin = 0.0, bil = 0.0, ab = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const auto b = lisa_basis(n);
        for (int k = 1; k <= n; ++k) {
            const Matrix3c to = linear_transform(Direction::to_lisa, k, n);
            const Matrix3c from = linear_transform(Direction::from_lisa, k, n);
            for (int r = 0; r < 3; ++r) {
                Operator s = Operator::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
                for (int c = 0; c < 3; ++c) s += to(r, c) * cartesian_product({{k, axes[c]}}, n);
                lin = std::max(lin, max_abs(s - b->component(make_label({k}), 1, r - 1)));
            }
            for (int a = 0; a < 3; ++a) {
                Operator s = Operator::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
                for (int r = 0; r < 3; ++r) s += from(a, r) * b->component(make_label({k}), 1, r - 1);
                lin = std::max(lin, max_abs(s - cartesian_product({{k, axes[a]}}, n)));
            }
            for (int l = k + 1; l <= n; ++l) {
                const Matrix9c to2 = bilinear_transform(Direction::to_lisa, k, l, n);
                const Matrix9c from2 = bilinear_transform(Direction::from_lisa, k, l, n);
                ab = std::max(ab, (to2 * from2 - Matrix9c::Identity()).cwiseAbs().maxCoeff());
                std::vector<Operator> rows;
                for (int j = 0; j <= 2; ++j)
                    for (int m = -j; m <= j; ++m) rows.push_back(b->component(make_label({k, l}), j, m));
                std::vector<Operator> cart;
                for (int c = 0; c < 9; ++c) cart.push_back(2.0 * cartesian_product({{k, axes[c / 3]}, {l, axes[c % 3]}}, n));
                for (int r = 0; r < 9; ++r) {
                    Operator s = Operator::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
                    Operator t = s;
                    for (int c = 0; c < 9; ++c) {
                        s += to2(r, c) * cart[c];
                        t += from2(r, c) * rows[c];
                    }
                    bil = std::max(bil, max_abs(s - rows[r]));
                    bil = std::max(bil, max_abs(t - cart[r]));
                }
            }
        }
    }
    out.push_back(detail::within("linear transforms", lin, 1e-10));
    out.push_back(detail::within("bilinear transforms", bil, 1e-10));
    out.push_back(detail::within("A*B = identity", ab, 1e-12));

    const auto b3 = lisa_basis(3);
    const auto& tri = trilinear_tables();
    out.push_back(detail::within("trilinear LISA -> Cartesian table", table_deviation(tri.lisa_to_cartesian, *b3), 1e-10));
    out.push_back(detail::within("trilinear Cartesian -> LISA table", table_deviation(tri.cartesian_to_lisa, *b3), 1e-10));

    const auto mb = multipole_basis(3);
    if (opt.strict) {
        double dev = 0.0;
        std::string bad;
        for (const auto& row : tables::multipole_to_lisa) {
            const double d = multipole_row_deviation(row, *mb, *b3);
            if (d > 1e-10) bad += (bad.empty() ? "" : ", ") + std::string(row.lhs);
            dev = std::max(dev, d);
        }
        out.push_back(detail::within("multipole table", dev, 1e-10, bad.empty() ? "" : "rows off: " + bad));
    } else {
        double ok = 0.0;
        for (const auto& row : tables::multipole_to_lisa) {
            const char* sym = multipole_conflict_symbol(std::string(row.lhs));
            if (!sym) {
                ok = std::max(ok, multipole_row_deviation(row, *mb, *b3));
                continue;
            }
            const double as_printed = multipole_row_deviation(row, *mb, *b3);
            const double flipped = multipole_row_deviation(row, *mb, *b3, sym);
            Check c = detail::within("multipole row " + std::string(row.lhs) + " with " + sym + " negated", flipped, 1e-10,
                                     "printed sign deviates by " + detail::fmt(as_printed));
            c.note = true;
            out.push_back(c);
        }
        out.push_back(detail::within("multipole table, consistent rows", ok, 1e-10));
    }
    return out;
}

inline std::vector<Check> verify_counting(const VerifyOptions&) {
    std::vector<Check> out;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& r : tables::droplet_counts) {
        const auto b = droplet_bounds(r.n);
        const std::int64_t mp = multipole_droplet_count(r.n);
        const bool ok = b.minimum == r.minimum && b.lisa == r.lisa && b.maximum == r.maximum && mp == r.multipole;
        out.push_back(detail::equal("droplet counts n=" + std::to_string(r.n), ok,
                                    std::to_string(b.minimum) + "/" + std::to_string(mp) + "/" + std::to_string(b.lisa) + "/" +
                                        std::to_string(b.maximum)));
    }
    for (int n = 1; n <= 8; ++n) {
        bool ok = true;
        std::size_t expected = 0;
        const auto rows = multiplicity_table(n);
        for (const auto& ref : tables::rank_multiplicities) {
            if (ref.n != n) continue;
            ++expected;
            auto it = std::find_if(rows.begin(), rows.end(), [&](const MultiplicityRow& r) { return r.j == ref.j; });
            ok = ok && it != rows.end() && it->n_j == ref.n_j && it->n_bar_j == ref.n_bar_j;
        }
        for (const auto& r : rows)
            if (r.j > n || (r.n_bar_j != 0 && r.j < 0)) ok = false;
        ok = ok && rows.size() == expected;
        out.push_back(detail::equal("rank multiplicities n=" + std::to_string(n), ok));
    }
    for (int g = 1; g <= 6; ++g) {
        std::vector<const tables::SymmetryRankEntry*> ref;
        for (const auto& e : tables::symmetry_ranks())
            if (e.g == g) ref.push_back(&e);
        const auto rows = symmetry_rank_table(g);
        bool ok = rows.size() == ref.size();
        for (std::size_t i = 0; ok && i < rows.size(); ++i)
            ok = rows[i].lambda == ref[i]->lambda && rows[i].tableau_count == ref[i]->tableau_count && rows[i].ranks == ref[i]->ranks;
        out.push_back(detail::equal("symmetry types and ranks g=" + std::to_string(g), ok));
    }
    out.push_back(detail::within("runtime (s)", detail::seconds_since(t0), 60.0));
    return out;
}

inline std::vector<Check> verify_wigner(const VerifyOptions& opt) {
    std::vector<Check> out;
    for (int n = 2; n <= 3; ++n) {
        const auto b = lisa_basis(n);
        std::mt19937_64 rng(1000 + n);
        double coef = 0.0, quad = 0.0;
        for (int k = 0; k < opt.samples; ++k) {
            const Operator a = detail::random_operator(n, rng), c = detail::random_operator(n, rng);
            const auto r = check_wigner_properties(a, c, *b, {8, static_cast<std::uint64_t>(k + 1)});
            coef = std::max(coef, r.max_coefficient());
            quad = std::max(quad, r.max_quadrature());
        }
        out.push_back(detail::within("properties (a)-(e), coefficients, n=" + std::to_string(n), coef, 1e-8));
        out.push_back(detail::within("properties (a)-(e), quadrature degree 8, n=" + std::to_string(n), quad, 1e-6));
    }
    const auto b2 = lisa_basis(2);
    const Operator t = b2->component(make_label({1, 2}), 0, 0);
    out.push_back(detail::within("traceless T00{1,2}: weighted norm integral", std::abs(weighted_norm_integral(t, *b2)), 1e-10,
                                 "unweighted integral " + detail::fmt(unweighted_integral(decompose(t, *b2)))));
    return out;
}

inline std::vector<Check> verify_dynamics(const VerifyOptions&) {
    std::vector<Check> out;
    const auto t0 = std::chrono::steady_clock::now();
    const auto b = lisa_basis(3);
    const SequenceTrace tr = run_sequence(total_spin('z', 3), triple_quantum_sequence());
    out.push_back(detail::within("rho(t1) = -(I1y+I2y+I3y)", max_abs(tr.states[1] + total_spin('y', 3)), 1e-10));

    const DropLabel t1 = make_label({1, 2, 3}, 1);
    auto spectrum_check = [&](const std::string& name, const Operator& rho, const std::vector<std::tuple<int, int, cplx>>& want) {
        const auto s = decompose(rho, *b);
        double dev = 0.0, rest = 0.0;
        std::string detail;
        for (const auto& [l, terms] : s.droplets)
            for (const auto& [jm, c] : terms) {
                auto it = std::find_if(want.begin(), want.end(), [&](const auto& w) {
                    return l == t1 && std::get<0>(w) == jm.first && std::get<1>(w) == jm.second;
                });
                if (it == want.end()) rest = std::max(rest, std::abs(c));
                else {
                    dev = std::max(dev, std::abs(c - std::get<2>(*it)));
                    detail += "T" + std::to_string(jm.first) + "," + std::to_string(jm.second) + "=" + detail::fmt(c) + " ";
                }
            }
        out.push_back(detail::within(name + " printed coefficients", dev, 0.01, detail));
        out.push_back(detail::within(name + " no other terms", rest, 1e-10));
    };
    const cplx i = I_unit;
    spectrum_check("rho(t2)", tr.states[2], {{1, -1, 0.78 * i}, {1, 1, 0.78 * i}, {3, -1, 1.55 * i}, {3, 1, 1.55 * i}});
    spectrum_check("rho(t3)", tr.states[3],
                   {{1, -1, 0.78 * i}, {1, 1, 0.78 * i}, {3, -1, -0.39 * i}, {3, 1, -0.39 * i}, {3, -3, 1.5 * i}, {3, 3, 1.5 * i}});

    using F = std::vector<std::pair<int, char>>;
    auto coef = [](const Operator& a, const std::string& axes) {
        F f;
        for (std::size_t k = 0; k < axes.size(); ++k)
            if (axes[k] != '1') f.emplace_back(static_cast<int>(k) + 1, axes[k]);
        return product_coefficient(a, f, 3);
    };
    // every operator of a group must carry the printed value
    auto group = [&](const Operator& a, const std::vector<std::string>& ops, cplx want, double& dev) {
        for (const auto& o : ops) dev = std::max(dev, std::abs(coef(a, o) - want));
    };
    const std::vector<std::string> lin_z = {"z11", "1z1", "11z"}, bil_z = {"zz1", "z1z", "1zz"};
    const std::vector<std::string> mixed = {"xxy", "xyx", "yxx", "yyx", "yxy", "xyy"};

    double h = 0.0;
    const Operator& heff = tr.effective_hamiltonian;
    group(heff, lin_z, -18.1, h);
    group(heff, {"xxx", "yyy"}, -24.2, h);
    group(heff, {"zzz"}, 24.2, h);
    group(heff, mixed, -72.5, h);
    {
        // the identity part is a global phase of U_eff and carries no dynamics
        Operator rest = heff - coef(heff, "111") * identity(3);
        for (const auto& o : lin_z) rest -= coef(heff, o) * cartesian_product({{int(o.find('z')) + 1, 'z'}}, 3);
        for (const auto& o : std::vector<std::string>{"xxx", "yyy", "zzz", "xxy", "xyx", "yxx", "yyx", "yxy", "xyy"})
            rest -= coef(heff, o) * cartesian_product({{1, o[0]}, {2, o[1]}, {3, o[2]}}, 3);
        out.push_back(detail::within("H_eff printed coefficients (Hz)", h, 0.1,
                                     "z " + detail::fmt(coef(heff, "z11")) + " xxx " + detail::fmt(coef(heff, "xxx")) + " xxy " +
                                         detail::fmt(coef(heff, "xxy"))));
        out.push_back(detail::within("H_eff no other traceless terms", max_abs(rest), 1e-8));
    }

    double u = 0.0;
    for (int k : {0, 2}) {
        const char a = k == 0 ? 'x' : 'y';
        const Operator& uk = tr.propagators[static_cast<std::size_t>(k)];
        const std::string s1(1, a);
        group(uk, {"111"}, 0.35, u);
        group(uk, {s1 + "11", "1" + s1 + "1", "11" + s1}, -0.71 * i, u);
        group(uk, {s1 + s1 + "1", s1 + "1" + s1, "1" + s1 + s1}, -1.41, u);
        group(uk, {s1 + s1 + s1}, 2.83 * i, u);
    }
    group(tr.propagators[1], {"111"}, 0.35 * (1.0 + i), u);
    group(tr.propagators[1], bil_z, -1.41 * (1.0 + i), u);
    const Operator& ue = tr.effective_propagator;
    group(ue, {"111"}, 0.18 * (1.0 + i), u);
    group(ue, bil_z, -0.71 * (1.0 + i), u);
    group(ue, {"xxx", "yyy", "xxy", "xyx", "yxx", "yyx", "yxy", "xyy"}, -1.41 * (1.0 - i), u);
    group(ue, {"zzz"}, 1.41 * (1.0 - i), u);
    for (const auto& o : lin_z) u = std::max(u, std::abs(std::abs(coef(ue, o)) - 0.35 * std::sqrt(2.0)));
    out.push_back(detail::within("propagator printed coefficients", u, 0.01));
    out.push_back(detail::within("runtime (s)", detail::seconds_since(t0), 1.0));
    return out;
}

inline std::vector<Check> verify_entanglement(const VerifyOptions& opt) {
    std::vector<Check> out;
    const auto b2 = lisa_basis(2);
    const DropLabel l1 = make_label({1});
    auto conc = [&](const Operator& rho) { return concurrence_from_radius(max_droplet_radius(decompose(rho, *b2), l1)); };
    out.push_back(detail::within("concurrence |00>", std::abs(conc(named_state("zero-product", 2))), 1e-6));
    out.push_back(detail::within("concurrence |Phi+>", std::abs(conc(named_state("phi+")) - 1.0), 1e-6));
    std::mt19937_64 rng(2024);
    double dev = 0.0;
    for (int k = 0; k < 20; ++k) {
        const Eigen::VectorXcd psi = detail::random_state(2, rng);
        dev = std::max(dev, std::abs(conc(pure_density(psi)) - spin_flip_concurrence(psi)));
    }
    out.push_back(detail::within("concurrence vs spin-flip oracle, 20 states", dev, 1e-6));

    const auto b3 = lisa_basis(3);
    const auto ghz = decompose(named_state("GHZ"), *b3);
    double lin = 0.0;
    for (int k = 1; k <= 3; ++k) lin = std::max(lin, ghz.droplet_norm(make_label({k})));
    out.push_back(detail::within("GHZ linear droplets", lin, 1e-12));
    const auto w = decompose(named_state("W"), *b3);
    const auto z = decompose(named_state("zero-product", 3), *b3);
    double ratio = 0.0;
    for (int k = 1; k <= 3; ++k)
        ratio = std::max(ratio, max_droplet_radius(w, make_label({k})) / max_droplet_radius(z, make_label({k})));
    if (opt.strict) {
        out.push_back(detail::within("W linear droplet radius / |000> radius", ratio, 0.1));
    } else {
        // W has single-spin Bloch length 1/3, so the 0.1 bound cannot hold; check the exact value instead
        Check c = detail::within("W linear droplet radius / |000> radius = 1/3", std::abs(ratio - 1.0 / 3.0), 1e-10,
                                 "ratio " + detail::fmt(ratio) + " exceeds the 0.1 bound");
        c.note = true;
        out.push_back(c);
    }
    return out;
}

inline std::vector<Check> verify_coherence(const VerifyOptions& opt) {
    std::vector<Check> out;
    bool unique = true;
    double law = 0.0;
    for (int n = 1; n <= opt.max_n; ++n) {
        const auto b = lisa_basis(n);
        for (const auto& t : b->tensors)
            for (int m = -t.j; m <= t.j; ++m) {
                const auto parts = coherence_orders(t[m], *b, 1e-10);
                unique = unique && parts.size() == 1 && parts.begin()->first == m;
                law = std::max(law, coherence_deviation(parts, n, 0.7));
            }
    }
    out.push_back(detail::equal("every T_{j,m} has the single order m", unique));
    out.push_back(detail::within("z-rotation law of the order parts", law, 1e-10));

    double dq = 0.0;
    bool orders = true;
    for (int n = 2; n <= 3; ++n) {
        const auto b = lisa_basis(n);
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
                if (k == l) continue;
                const Operator a = 2.0 * cartesian_product({{k, 'x'}, {l, 'y'}}, n);
                const auto parts = coherence_orders(a, *b, 1e-10);
                std::vector<int> ps;
                for (const auto& [p, o] : parts) ps.push_back(p);
                orders = orders && ps == std::vector<int>{-2, 0, 2};
                if (ps != std::vector<int>{-2, 0, 2}) continue;
                const Operator xy = cartesian_product({{k, 'x'}, {l, 'y'}}, n), yx = cartesian_product({{k, 'y'}, {l, 'x'}}, n);
                const Operator dqy = xy + yx, zqy = -xy + yx;
                dq = std::max(dq, max_abs(parts.at(2) + parts.at(-2) - dqy));
                dq = std::max(dq, max_abs(parts.at(0) + zqy));
            }
    }
    out.push_back(detail::equal("2IkxIly splits into orders -2, 0, +2", orders));
    out.push_back(detail::within("2IkxIly = DQy - ZQy", dq, 1e-10));
    return out;
}

inline std::vector<Check> verify_restricted(const VerifyOptions&) {
    std::vector<Check> out;
    const auto b = lisa_basis(3);
    auto one = [&](const std::string& name, const std::vector<Permutation>& gens, int fam, int dim, int drops) {
        const auto r = restrict_basis(*b, gens);
        const int f = static_cast<int>(r.tensors.size()), d = r.dimension(), l = static_cast<int>(r.labels().size());
        out.push_back(detail::equal(name, f == fam && d == dim && l == drops,
                                    std::to_string(f) + " families, " + std::to_string(d) + " dimensions, " + std::to_string(l) + " droplets"));
    };
    one("spins 1,2 equivalent (I2S)", {Permutation::parse("(12)", 3)}, 12, 40, 7);
    one("all spins equivalent", {Permutation::parse("(12)", 3), Permutation::parse("(123)", 3)}, 6, 20, 4);
    return out;
}

inline std::vector<Check> verify_cross_oracle(const VerifyOptions& opt) {
    std::vector<Check> out;
    for (int n = 2; n <= 3; ++n) {
        const auto b = lisa_basis(n);
        std::mt19937_64 rng(77 + n);
        std::vector<std::set<int>> keeps;
        for (int mask = 1; mask < (1 << n) - 1; ++mask) {
            std::set<int> k;
            for (int s = 0; s < n; ++s)
                if (mask & (1 << s)) k.insert(s + 1);
            keeps.push_back(k);
        }
        double dev = 0.0;
        for (int k = 0; k < opt.samples; ++k) {
            const Operator rho = detail::random_density(n, rng);
            const auto s = decompose(rho, *b);
            for (const auto& keep : keeps) {
                const auto rs = reduce_spectrum(s, keep);
                dev = std::max(dev, max_abs(reconstruct(rs, *lisa_basis(static_cast<int>(keep.size()))) - partial_trace(rho, n, keep)));
            }
        }
        out.push_back(detail::within("reduce_spectrum vs partial_trace n=" + std::to_string(n), dev, 1e-10));
    }
    return out;
}

inline std::vector<Check> verify_multipole(const VerifyOptions&) {
    std::vector<Check> out;
    const auto mb = multipole_basis(3);
    std::vector<const Operator*> comps;
    for (const auto& t : mb->tensors)
        for (const auto& c : t.comps) comps.push_back(&c);
    double orth = 0.0;
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t k = i; k < comps.size(); ++k)
            orth = std::max(orth, std::abs(frobenius(*comps[i], *comps[k]) - (i == k ? 1.0 : 0.0)));
    out.push_back(detail::within("multipole orthonormality n=3", orth, 1e-10, std::to_string(comps.size()) + " components"));
    for (const char* name : {"W", "GHZ"}) {
        const auto s = decompose(named_state(name), *mb);
        const auto ne = s.nonempty(1e-10);
        out.push_back(detail::equal(std::string(name) + " occupies one multipole droplet", ne.size() == 1));
    }
    return out;
}

struct Suite {
    const char* name;
    std::function<std::vector<Check>(const VerifyOptions&)> run;
};

inline const std::vector<Suite>& verify_suites() {
    static const std::vector<Suite> s = {
        {"basis", verify_basis},
        {"tables", verify_tables},
        {"counting", verify_counting},
        {"wigner", verify_wigner},
        {"dynamics", verify_dynamics},
        {"entanglement", verify_entanglement},
        {"coherence", verify_coherence},
        {"restricted", verify_restricted},
        {"cross-oracle", verify_cross_oracle},
        {"multipole", verify_multipole},
    };
    return s;
}

inline bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

}  // namespace drops
