#include <drops/opexpr.hpp>
#include <drops/verify.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace drops;

namespace {

constexpr double pi = std::numbers::pi;

Operator random_op(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    const Eigen::Index d = Eigen::Index{1} << n;
    Operator a(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) a(i, j) = cplx(g(rng), g(rng));
    return a;
}

Operator random_hermitian(int n, std::mt19937_64& rng) {
    const Operator a = random_op(n, rng);
    return (a + a.adjoint()) / 2.0;
}

DropletSpectrum lisa(const Operator& a) { return decompose(a, *lisa_basis(spin_count(a))); }

Eigen::Vector3d bloch_vector(const Operator& rho1) {
    return {2.0 * frobenius(spin_half('x'), rho1).real(), 2.0 * frobenius(spin_half('y'), rho1).real(),
            2.0 * frobenius(spin_half('z'), rho1).real()};
}

const SequenceTrace& example_trace() {
    static const SequenceTrace tr = run_sequence(total_spin('z', 3), triple_quantum_sequence());
    return tr;
}

}  // namespace

// dropsmap

TEST(DropsMap, LinearZDecomposition) {
    const auto s = lisa(parse_operator("I1z+I2z+I3z", 3));
    for (const auto& [l, terms] : s.droplets)
        for (const auto& [jm, c] : terms) {
            const bool linear_z = l.linearity() == 1 && jm == std::pair{1, 0};
            EXPECT_NEAR(std::abs(c - (linear_z ? std::sqrt(2.0) : 0.0)), 0.0, 1e-12) << l.str();
        }
}

TEST(DropsMap, ZeroOperator) {
    const auto s = lisa(Operator::Zero(8, 8));
    EXPECT_TRUE(s.nonempty(0.0).empty());
}

TEST(DropsMap, RoundTrips) {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n) {
        const auto b = lisa_basis(n);
        const Operator a = random_op(n, rng);
        const auto s = decompose(a, *b);
        EXPECT_LT(max_abs(reconstruct(s, *b) - a), 1e-10) << n;
        const auto s2 = decompose(reconstruct(s, *b), *b);
        for (const auto& [l, terms] : s.droplets)
            for (const auto& [jm, c] : terms) EXPECT_LT(std::abs(c - s2.coefficient(l, jm.first, jm.second)), 1e-10);
    }
    for (const auto& t : lisa_basis(2)->tensors)
        for (int m = -t.j; m <= t.j; ++m) {
            const auto s = lisa(t[m]);
            EXPECT_LT(std::abs(s.coefficient(t.label, t.j, m) - 1.0), 1e-12);
        }
}

TEST(DropsMap, ReconstructUnknownLabel) {
    DropletSpectrum s;
    s.n = 2;
    s.droplets[make_label({1, 2, 3}, 1)][{1, 0}] = 1.0;
    EXPECT_THROW(reconstruct(s, *lisa_basis(2)), Error);
}

TEST(DropsMap, PrintedIntermediateStateReconstructs) {
    const auto b = lisa_basis(3);
    DropletSpectrum s;
    s.n = 3;
    const DropLabel t1 = make_label({1, 2, 3}, 1);
    s.droplets[t1][{1, -1}] = cplx(0, 0.78);
    s.droplets[t1][{1, 1}] = cplx(0, 0.78);
    s.droplets[t1][{3, -1}] = cplx(0, 1.55);
    s.droplets[t1][{3, 1}] = cplx(0, 1.55);
    const Operator want = parse_operator("4 (Iyzz + Izyz + Izzy)", 3);
    EXPECT_LT(max_abs(reconstruct(s, *b) - want), 0.01);
}

TEST(DropsMap, SphericalHarmonics) {
    EXPECT_NEAR(std::abs(spherical_harmonic(0, 0, 1.1, 2.3) - 0.28209479177387814), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(spherical_harmonic(1, 0, 0.0, 0.4) - std::sqrt(3.0 / (4 * pi))), 0.0, 1e-14);
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 20; ++k) {
        const double th = pi * u(rng), ph = 2 * pi * u(rng);
        for (int j = 0; j <= 6; ++j)
            for (int m = -j; m <= j; ++m)
                EXPECT_LT(std::abs(spherical_harmonic(j, -m, th, ph) - (m % 2 ? -1.0 : 1.0) * std::conj(spherical_harmonic(j, m, th, ph))), 1e-12);
    }
    EXPECT_THROW(spherical_harmonic(1, 2, 0.0, 0.0), Error);
}

TEST(DropsMap, QuadratureIntegrals) {
    const auto q = sphere_quadrature(12);
    cplx y00 = 0.0, y21 = 0.0;
    for (const auto& nd : q) {
        y00 += nd.weight * spherical_harmonic(0, 0, nd.theta, nd.phi);
        y21 += nd.weight * spherical_harmonic(2, 1, nd.theta, nd.phi);
    }
    EXPECT_NEAR(std::abs(y00 - 2.0 * std::sqrt(pi)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(y21), 0.0, 1e-12);
    for (int j = 0; j <= 6; ++j)
        for (int m = -j; m <= j; ++m) {
            cplx s = 0.0;
            for (const auto& nd : q) s += nd.weight * std::norm(spherical_harmonic(j, m, nd.theta, nd.phi));
            EXPECT_NEAR(std::abs(s - 1.0), 0.0, 1e-12) << j << " " << m;
        }
}

TEST(DropsMap, LinearDropletPointsAlongAxis) {
    const auto s = lisa(parse_operator("I2z", 2));
    const DropLabel l = make_label({2});
    EXPECT_GT(eval_droplet(s, l, 0.0, 0.0).real(), 0.0);
    EXPECT_LT(eval_droplet(s, l, pi, 0.0).real(), 0.0);
    EXPECT_LT(std::abs(eval_droplet(s, l, 0.0, 0.0).imag()), 1e-15);
}

TEST(DropsMap, HermitianDropletsTakeTwoPhases) {
    std::mt19937_64 rng(13);
    const Operator h = random_hermitian(2, rng);
    const cplx g = std::exp(cplx(0, 0.6));
    const auto s = lisa(Operator(g * h));
    for (const auto& l : s.nonempty())
        for (const auto& p : sample_droplet(s, l, 9, 12)) {
            if (std::abs(p.value) < 1e-9) continue;
            const cplx r = p.value / g;
            EXPECT_LT(std::abs(r.imag()), 1e-10 * std::abs(p.value) + 1e-12);
        }
}

TEST(DropsMap, IdentityDropletIsConstant) {
    const auto s = lisa(identity(2));
    const DropLabel id = make_label({});
    const cplx f0 = eval_droplet(s, id, 0.2, 0.3);
    EXPECT_LT(std::abs(eval_droplet(s, id, 2.9, 5.0) - f0), 1e-14);
    EXPECT_EQ(s.nonempty().size(), 1u);
}

TEST(DropsMap, WignerPropertiesRandomPairs) {
    std::mt19937_64 rng(14);
    for (int n = 2; n <= 3; ++n) {
        const auto b = lisa_basis(n);
        for (int k = 0; k < 10; ++k) {
            const auto r = check_wigner_properties(random_op(n, rng), random_op(n, rng), *b);
            EXPECT_LE(r.max_coefficient(), 1e-8);
            EXPECT_LE(r.max_quadrature(), 1e-6);
        }
    }
}

TEST(DropsMap, WignerTraceAndNormOnScalarPair) {
    const auto b = lisa_basis(2);
    const Operator t = b->component(make_label({1, 2}), 0, 0);
    const auto s = decompose(t, *b);
    EXPECT_NEAR(std::abs(detail::pairing_coefficients(s, s) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(detail::pairing_quadrature(s, s, sphere_quadrature(8)) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(weighted_norm_integral(t, *b)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(unweighted_integral(s) - 2.0 * std::sqrt(pi)), 0.0, 1e-12);
}

TEST(DropsMap, Covariance) {
    const auto b = lisa_basis(2);
    std::mt19937_64 rng(15);
    const Operator a = random_op(2, rng);
    EXPECT_LT(check_covariance(a, 'y', 0.0, *b), 1e-14);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Eigen::Vector3d axis(u(rng), u(rng), u(rng));
    EXPECT_LT(check_covariance(a, axis, 2.1, *b, 32, 64), 1e-8);
    EXPECT_LT(check_covariance(random_op(3, rng), 'x', 0.9, *lisa_basis(3), 32, 64), 1e-8);
}

TEST(DropsMap, PiRotationInvertsBilinearDroplet) {
    const auto b = lisa_basis(2);
    const Operator a = parse_operator("2 I1x I2z", 2);
    const Operator u = rotation_operator(Eigen::Vector3d::UnitX(), pi, 2);
    const auto s0 = decompose(a, *b), s1 = decompose(Operator(u * a * u.adjoint()), *b);
    const DropLabel l = make_label({1, 2});
    for (const auto& [jm, c] : s0.droplets.at(l)) EXPECT_LT(std::abs(s1.coefficient(l, jm.first, jm.second) + c), 1e-12);
}

TEST(DropsMap, CoherenceOrders) {
    const auto b = lisa_basis(2);
    const auto parts = coherence_orders(parse_operator("2 I1x I2y", 2), *b);
    std::vector<int> orders;
    for (const auto& [p, a] : parts) orders.push_back(p);
    EXPECT_EQ(orders, (std::vector<int>{-2, 0, 2}));
    const Operator dq = parse_operator("I1x I2y + I1y I2x", 2), zq = parse_operator("-I1x I2y + I1y I2x", 2);
    EXPECT_LT(max_abs(parts.at(-2) + parts.at(2) - dq), 1e-12);
    EXPECT_LT(max_abs(parts.at(0) + zq), 1e-12);
    EXPECT_LT(coherence_deviation(parts, 2, pi / 7), 1e-10);
    EXPECT_LT(coherence_deviation(parts, 2, pi / 3), 1e-10);

    const auto z = coherence_orders(parse_operator("I2z", 2), *b);
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(z.begin()->first, 0);

    const auto b3 = lisa_basis(3);
    const auto t3 = coherence_orders(example_trace().states[3], *b3);
    ASSERT_TRUE(t3.count(3) && t3.count(-3));
    const auto s3 = decompose(example_trace().states[3], *b3);
    const DropLabel t1 = make_label({1, 2, 3}, 1);
    EXPECT_NEAR(std::abs(s3.coefficient(t1, 3, 3)), 1.5, 0.01);
    EXPECT_NEAR(std::abs(s3.coefficient(t1, 3, -3)), 1.5, 0.01);
}

TEST(DropsMap, CoherencePartsSumToOperator) {
    std::mt19937_64 rng(16);
    const Operator a = random_op(3, rng);
    Operator sum = Operator::Zero(8, 8);
    for (const auto& [p, ap] : coherence_orders(a, *lisa_basis(3))) sum += ap;
    EXPECT_LT(max_abs(sum - a), 1e-10);
}

TEST(DropsMap, ReduceSpectrumMatchesPartialTrace) {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 3; ++n) {
        const auto b = lisa_basis(n);
        for (int k = 0; k < 5; ++k) {
            const Operator a = random_op(n, rng);
            const Operator rho = a * a.adjoint() / (a * a.adjoint()).trace();
            const auto s = decompose(rho, *b);
            for (const std::set<int>& keep : {std::set<int>{1}, std::set<int>{2}, std::set<int>{1, n}}) {
                const auto r = reduce_spectrum(s, keep);
                const auto br = lisa_basis(static_cast<int>(keep.size()));
                EXPECT_LT(max_abs(reconstruct(r, *br) - partial_trace(rho, n, keep)), 1e-10);
            }
        }
    }
}

TEST(DropsMap, ReduceSpectrumExamples) {
    const auto s = lisa(pure_density(basis_ket("00")));
    const auto r = reduce_spectrum(s, {1});
    EXPECT_EQ(r.droplets.size(), 2u);
    const auto all = reduce_spectrum(s, {1, 2});
    EXPECT_EQ(all.droplets.size(), s.droplets.size());
    const auto ghz = reduce_spectrum(lisa(named_state("GHZ")), {1});
    EXPECT_LT(ghz.droplet_norm(make_label({1})), 1e-12);
    EXPECT_THROW(reduce_spectrum(s, {}), Error);
}

TEST(DropsMap, ParsevalInCoefficientSpace) {
    std::mt19937_64 rng(18);
    const Operator a = random_op(3, rng), c = random_op(3, rng);
    const auto sa = lisa(a), sc = lisa(c);
    EXPECT_LT(std::abs(detail::pairing_coefficients(sa, sc) - (a * c).trace()), 1e-10);
    EXPECT_LT(std::abs(detail::pairing_coefficients(sa, sc) - detail::pairing_quadrature(sa, sc, sphere_quadrature(8))), 1e-9);
}

TEST(DropsMap, ZRotationPhasesSingleComponent) {
    const auto b = lisa_basis(3);
    const auto& t = *b->find(make_label({1, 2, 3}, 1), 3);
    const Operator u = rotation_operator(Eigen::Vector3d::UnitZ(), 0.8, 3);
    for (int m = -3; m <= 3; ++m)
        EXPECT_LT(max_abs(u * t[m] * u.adjoint() - std::exp(cplx(0, -m * 0.8)) * t[m]), 1e-10);
}

// dynamics

TEST(Dynamics, CouplingHamiltonians) {
    const Operator iso = coupling_hamiltonian(2, {{1, 2, 1.0}}, 1.0, 1.0);
    const auto s = lisa(iso);
    const DropLabel kl = make_label({1, 2});
    for (const auto& [jm, c] : s.droplets.at(kl))
        if (jm.first != 0) EXPECT_LT(std::abs(c), 1e-12);
    EXPECT_GT(std::abs(s.coefficient(kl, 0, 0)), 1.0);
    const auto zz = lisa(coupling_hamiltonian(2, {{1, 2, 1.0}}, 0.0, 1.0));
    EXPECT_GT(std::abs(zz.coefficient(kl, 0, 0)), 0.1);
    EXPECT_GT(std::abs(zz.coefficient(kl, 2, 0)), 0.1);
    EXPECT_NEAR(std::abs(zz.coefficient(kl, 2, 0) / zz.coefficient(kl, 0, 0)), std::sqrt(2.0), 1e-12);
    EXPECT_LT(max_abs(coupling_hamiltonian(3, {}, 1.0, 1.0)), 1e-15);
    EXPECT_THROW(coupling_hamiltonian(2, {{2, 1, 1.0}}, 1.0, 1.0), Error);
}

TEST(Dynamics, PulseHamiltonians) {
    const Operator h = pulse_hamiltonian(3, 10e3, 'x');
    EXPECT_LT(max_abs(h - 2 * pi * 10e3 * total_spin('x', 3)), 1e-9);
    EXPECT_NEAR(h.norm(), 2 * pi * 10e3 * std::sqrt(3.0 * 8 / 4.0), 1e-6);
    EXPECT_LT(max_abs(pulse_hamiltonian(3, 0.0, 'x')), 1e-15);
    EXPECT_LT(max_abs(pulse_hamiltonian(3, 10e3, 90.0) - 2 * pi * 10e3 * total_spin('y', 3)), 1e-9);
}

TEST(Dynamics, ExampleSequenceStates) {
    const auto& tr = example_trace();
    ASSERT_EQ(tr.states.size(), 4u);
    EXPECT_LT(max_abs(tr.states[1] + total_spin('y', 3)), 1e-10);
    const auto b = lisa_basis(3);
    const DropLabel t1 = make_label({1, 2, 3}, 1);
    const auto s2 = decompose(tr.states[2], *b);
    EXPECT_NEAR(std::abs(s2.coefficient(t1, 1, 1) - cplx(0, 0.78)), 0.0, 0.01);
    EXPECT_NEAR(std::abs(s2.coefficient(t1, 3, 1) - cplx(0, 1.55)), 0.0, 0.01);
    const auto s3 = decompose(tr.states[3], *b);
    EXPECT_NEAR(std::abs(s3.coefficient(t1, 1, -1) - cplx(0, 0.78)), 0.0, 0.01);
    EXPECT_NEAR(std::abs(s3.coefficient(t1, 3, -1) - cplx(0, -0.39)), 0.0, 0.01);
    EXPECT_NEAR(std::abs(s3.coefficient(t1, 3, 3) - cplx(0, 1.5)), 0.0, 0.01);
}

TEST(Dynamics, TraceIsUnitaryAndPreservesHermiticity) {
    const auto& tr = example_trace();
    for (const auto& u : tr.propagators) EXPECT_TRUE(is_unitary(u, 1e-10));
    for (const auto& r : tr.states) {
        EXPECT_TRUE(is_hermitian(r, 1e-12));
        EXPECT_LT(std::abs(r.trace()), 1e-12);
    }
    EXPECT_LT(max_abs(exp_hermitian(tr.effective_hamiltonian, tr.total_time) - tr.effective_propagator), 1e-8);
}

TEST(Dynamics, EffectiveHamiltonianLinearTerm) {
    const auto& tr = example_trace();
    for (int k = 1; k <= 3; ++k)
        EXPECT_NEAR(product_coefficient(tr.effective_hamiltonian, {{k, 'z'}}, 3).real(), -18.1, 0.1);
}

TEST(Dynamics, ZeroDurationIsNoOp) {
    PulseSegment s;
    s.kind = PulseSegment::Kind::pulse;
    s.amplitude_hz = 10e3;
    s.duration_s = 0.0;
    const auto tr = run_sequence(total_spin('z', 2), {s});
    EXPECT_LT(max_abs(tr.states.back() - total_spin('z', 2)), 1e-14);
}

TEST(Dynamics, NamedStates) {
    const Eigen::VectorXcd w = (basis_ket("100") + basis_ket("010") + basis_ket("001")) / std::sqrt(3.0);
    EXPECT_LT(max_abs(named_state("W") - w * w.adjoint()), 1e-15);
    for (const auto& name : named_state_names()) {
        const Operator r = named_state(name, 2);
        EXPECT_NEAR(std::abs(r.trace() - 1.0), 0.0, 1e-12) << name;
        EXPECT_LT(max_abs(r * r - r), 1e-12) << name;
    }
    EXPECT_LT(lisa(named_state("GHZ")).droplet_norm(make_label({2})), 1e-12);
    EXPECT_THROW(named_state("nope"), Error);
}

TEST(Dynamics, BlochLength) {
    EXPECT_NEAR(bloch_length(lisa(pure_density(basis_ket("00"))), 1), 1.0, 1e-6);
    EXPECT_NEAR(bloch_length(lisa(named_state("phi+")), 1), 0.0, 1e-6);
    std::mt19937_64 rng(19);
    for (int k = 0; k < 5; ++k) {
        const Operator a = random_op(2, rng);
        const Operator rho = a * a.adjoint() / (a * a.adjoint()).trace();
        EXPECT_NEAR(bloch_length(lisa(rho), 1), bloch_vector(partial_trace(rho, 2, {1})).norm(), 1e-6);
    }
}

TEST(Dynamics, Concurrence) {
    const DropLabel l1 = make_label({1});
    auto conc = [&](const Operator& rho) { return concurrence_from_radius(max_droplet_radius(lisa(rho), l1)); };
    EXPECT_NEAR(conc(pure_density(basis_ket("00"))), 0.0, 1e-6);
    EXPECT_NEAR(conc(named_state("phi+")), 1.0, 1e-6);
    std::mt19937_64 rng(20);
    for (int k = 0; k < 20; ++k) {
        std::normal_distribution<double> g;
        Eigen::VectorXcd psi(4);
        for (int i = 0; i < 4; ++i) psi(i) = cplx(g(rng), g(rng));
        psi.normalize();
        EXPECT_NEAR(conc(pure_density(psi)), spin_flip_concurrence(psi), 1e-6);
    }
    EXPECT_THROW(concurrence_from_radius(1.0), Error);
}

TEST(Dynamics, CollinearityOfLinearDroplet) {
    const Eigen::Vector3d v(0.3, -0.5, 0.8);
    const Operator a = v.x() * embed(spin_half('x'), 1, 1) + v.y() * embed(spin_half('y'), 1, 1) + v.z() * embed(spin_half('z'), 1, 1);
    const auto s = lisa(a);
    const DropLabel l = make_label({1});
    double best = -1.0;
    Eigen::Vector3d dir;
    cplx at;
    for (const auto& p : sample_droplet(s, l, 64, 128))
        if (std::abs(p.value) > best) {
            best = std::abs(p.value);
            at = p.value;
            dir = {std::sin(p.theta) * std::cos(p.phi), std::sin(p.theta) * std::sin(p.phi), std::cos(p.theta)};
        }
    EXPECT_LT(std::acos(std::clamp(dir.dot(v.normalized()), -1.0, 1.0)), 2 * pi / 63);
    EXPECT_GT(at.real(), 0.0);
}

TEST(Dynamics, BilinearLobeFollowsRightHandRule) {
    // 2 I1x I2y: positive lobe displaced along +z
    const auto s = lisa(parse_operator("2 I1x I2y", 2));
    const DropLabel l = make_label({1, 2});
    const cplx up = eval_droplet(s, l, pi / 4, pi / 4), down = eval_droplet(s, l, 3 * pi / 4, pi / 4);
    EXPECT_LT(std::abs(up.imag()) + std::abs(down.imag()), 1e-12);
    EXPECT_GT(up.real(), 0.0);
    EXPECT_GT(up.real(), down.real());
}

// multipole

TEST(Multipole, CoupledStates) {
    EXPECT_EQ(coupled_basis(1).states.size(), 2u);
    const auto c2 = coupled_basis(2);
    EXPECT_EQ(c2.states.size(), 4u);
    EXPECT_EQ(c2.blocks.size(), 2u);
    const auto c3 = coupled_basis(3);
    EXPECT_EQ(c3.states.size(), 8u);
    ASSERT_EQ(c3.blocks.size(), 3u);
    EXPECT_EQ(c3.blocks[0].j2, 3);
    EXPECT_EQ(c3.blocks[1].j2, 1);
    EXPECT_EQ(c3.blocks[2].j2, 1);
    Operator gram(8, 8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) gram(a, b) = c3.states[a].amplitudes.dot(c3.states[b].amplitudes);
    EXPECT_LT(max_abs(gram - identity(3)), 1e-12);
}

TEST(Multipole, FirstRowsOfDecomposition) {
    const auto mb = multipole_basis(3);
    const auto lb = lisa_basis(3);
    EXPECT_LE(multipole_row_deviation(tables::multipole_to_lisa[0], *mb, *lb), 1e-10);
    EXPECT_LE(multipole_row_deviation(tables::multipole_to_lisa[3], *mb, *lb), 1e-10);
}

TEST(Multipole, DecompositionTableRows) {
    const auto mb = multipole_basis(3);
    const auto lb = lisa_basis(3);
    int matching = 0, conflicting = 0;
    for (const auto& row : tables::multipole_to_lisa) {
        const std::string key(row.lhs);
        if (const char* sym = multipole_conflict_symbol(key)) {
            ++conflicting;
            EXPECT_GT(multipole_row_deviation(row, *mb, *lb), 0.1) << key;
            EXPECT_LE(multipole_row_deviation(row, *mb, *lb, sym), 1e-10) << key;
        } else {
            ++matching;
            EXPECT_LE(multipole_row_deviation(row, *mb, *lb), 1e-10) << key;
        }
    }
    EXPECT_EQ(matching, 13);
    EXPECT_EQ(conflicting, 7);
}

TEST(Multipole, RacahNormAndCompleteness) {
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 3; ++n) {
        const auto mb = multipole_basis(n);
        int dim = 0;
        for (const auto& t : mb->tensors) {
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 1);
            LabeledTensorOp as_lisa{make_label(all, n >= 3 ? 1 : 0), t.j, t.comps};
            EXPECT_LE(racah_deviation(as_lisa, n), 1e-10);
            for (int m = -t.j; m <= t.j; ++m) EXPECT_NEAR(frobenius(t[m], t[m]).real(), 1.0, 1e-12);
            dim += 2 * t.j + 1;
        }
        EXPECT_EQ(dim, 1 << (2 * n));
        const Operator a = random_op(n, rng);
        EXPECT_LT(max_abs(reconstruct(decompose(a, *mb), *mb) - a), 1e-10);
    }
}

TEST(Multipole, TransitionRanks) {
    // allowed (transition, rank) pairs for three spins
    const auto mb = multipole_basis(3);
    std::map<std::pair<int, int>, std::vector<int>> ranks;
    for (const auto& t : mb->tensors) ranks[{t.label.from.j2, t.label.to.j2}].push_back(t.j);
    EXPECT_EQ(ranks.at({3, 3}), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(ranks.at({1, 1}).size(), 8u);
    EXPECT_EQ(ranks.at({3, 1}).size(), 4u);
    EXPECT_EQ(ranks.at({1, 3}).size(), 4u);
    EXPECT_EQ(mb->labels().size(), 9u);
}

TEST(Multipole, DropletCounts) {
    EXPECT_EQ(multipole_droplet_count(1), 1);
    EXPECT_EQ(multipole_droplet_count(3), 9);
    EXPECT_EQ(multipole_droplet_count(4), 36);
}

TEST(Multipole, EntangledStatesOccupyOneDroplet) {
    const auto mb = multipole_basis(3);
    for (const char* name : {"W", "GHZ"}) EXPECT_EQ(decompose(named_state(name), *mb).nonempty(1e-10).size(), 1u) << name;
}

// verify suites

TEST(Verify, AllSuitesPassWithDocumentedNotes) {
    VerifyOptions opt;
    opt.samples = 10;
    for (const auto& s : verify_suites()) {
        if (std::string_view(s.name) == "counting") continue;
        for (const auto& c : s.run(opt)) EXPECT_TRUE(c.pass) << s.name << ": " << c.name << " " << c.value << " " << c.detail;
    }
}

TEST(Verify, StrictModeReportsKnownFailures) {
    VerifyOptions opt;
    opt.strict = true;
    opt.samples = 5;
    std::vector<std::string> failing;
    for (const auto& s : verify_suites()) {
        const std::string_view name = s.name;
        if (name != "tables" && name != "entanglement") continue;
        for (const auto& c : s.run(opt))
            if (!c.pass) failing.push_back(c.name);
    }
    ASSERT_EQ(failing.size(), 2u);
    EXPECT_EQ(failing[0], "multipole table");
    EXPECT_EQ(failing[1], "W linear droplet radius / |000> radius");
}
