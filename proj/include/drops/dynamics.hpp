#pragma once

#include "dropsmap.hpp"

#include <string_view>

namespace drops {

struct Coupling {
    int k = 1;
    int l = 2;
    double J = 0.0;  // Hz
};

// H = 2 pi sum_kl J_kl (a I_kx I_lx + a I_ky I_ly + b I_kz I_lz)
inline Operator coupling_hamiltonian(int n, const std::vector<Coupling>& couplings, double a, double b) {
    const Eigen::Index d = Eigen::Index{1} << n;
    Operator h = Operator::Zero(d, d);
    for (const auto& c : couplings) {
        if (!(1 <= c.k && c.k < c.l && c.l <= n)) throw Error("coupling pair must satisfy 1 <= k < l <= n");
        const Operator xx = embed(spin_half('x'), c.k, n) * embed(spin_half('x'), c.l, n);
        const Operator yy = embed(spin_half('y'), c.k, n) * embed(spin_half('y'), c.l, n);
        const Operator zz = embed(spin_half('z'), c.k, n) * embed(spin_half('z'), c.l, n);
        h += 2.0 * std::numbers::pi * c.J * (a * xx + a * yy + b * zz);
    }
    return h;
}

inline std::vector<Coupling> all_pairs(int n, double J) {
    std::vector<Coupling> out;
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) out.push_back({k, l, J});
    return out;
}

// Pulse phase in degrees: x = 0, y = 90, -x = 180, -y = 270.
inline double parse_phase(std::string_view p) {
    if (p == "x" || p == "+x") return 0.0;
    if (p == "y" || p == "+y") return 90.0;
    if (p == "-x") return 180.0;
    if (p == "-y") return 270.0;
    throw Error("unknown pulse phase '" + std::string(p) + "'");
}

// 2 pi amplitude sum_k (cos(phase) I_kx + sin(phase) I_ky)
inline Operator pulse_hamiltonian(int n, double amplitude_hz, double phase_deg) {
    if (amplitude_hz < 0.0) throw Error("pulse amplitude must be non-negative");
    const double ph = phase_deg * std::numbers::pi / 180.0;
    Operator h = std::cos(ph) * total_spin('x', n) + std::sin(ph) * total_spin('y', n);
    h *= 2.0 * std::numbers::pi * amplitude_hz;
    // exact zeros keep named axes free of rounding noise
    return h.unaryExpr([](cplx v) { return std::abs(v) < 1e-15 ? cplx(0.0) : v; });
}

inline Operator pulse_hamiltonian(int n, double amplitude_hz, char axis) {
    if (axis != 'x' && axis != 'y') throw Error("pulse axis must be x or y");
    return pulse_hamiltonian(n, amplitude_hz, axis == 'x' ? 0.0 : 90.0);
}

struct PulseSegment {
    enum class Kind { pulse, delay };
    Kind kind = Kind::delay;
    double amplitude_hz = 0.0;
    double phase_deg = 0.0;
    double duration_s = 0.0;
    std::vector<Coupling> couplings;
    double a = 0.0;
    double b = 1.0;
    bool couplings_during_pulse = false;
};

inline Operator segment_hamiltonian(const PulseSegment& s, int n) {
    if (s.duration_s < 0.0) throw Error("segment duration must be non-negative");
    const Eigen::Index d = Eigen::Index{1} << n;
    Operator h = Operator::Zero(d, d);
    if (s.kind == PulseSegment::Kind::pulse) {
        h += pulse_hamiltonian(n, s.amplitude_hz, s.phase_deg);
        if (s.couplings_during_pulse) h += coupling_hamiltonian(n, s.couplings, s.a, s.b);
    } else {
        h += coupling_hamiltonian(n, s.couplings, s.a, s.b);
    }
    return h;
}

struct SequenceTrace {
    std::vector<Operator> states;        // rho(t_0) .. rho(t_k)
    std::vector<Operator> hamiltonians;  // per segment
    std::vector<Operator> propagators;   // per segment
    Operator effective_propagator;
    Operator effective_hamiltonian;
    double total_time = 0.0;
};

inline SequenceTrace run_sequence(const Operator& rho0, const std::vector<PulseSegment>& segments) {
    const int n = spin_count(rho0);
    const Eigen::Index d = rho0.rows();
    SequenceTrace tr;
    tr.states.push_back(rho0);
    tr.effective_propagator = Operator::Identity(d, d);
    for (const auto& s : segments) {
        Operator h = segment_hamiltonian(s, n);
        Operator u = exp_hermitian(h, s.duration_s);
        const Operator& prev = tr.states.back();
        tr.states.push_back(u * prev * u.adjoint());
        tr.effective_propagator = u * tr.effective_propagator;
        tr.hamiltonians.push_back(std::move(h));
        tr.propagators.push_back(std::move(u));
        tr.total_time += s.duration_s;
    }
    if (tr.total_time > 0.0)
        tr.effective_hamiltonian = log_unitary_principal(tr.effective_propagator, tr.total_time);
    else
        tr.effective_hamiltonian = Operator::Zero(d, d);
    return tr;
}

// The three-segment triple-quantum excitation: 90x pulse, ZZ delay, 90y pulse.
inline std::vector<PulseSegment> triple_quantum_sequence(double amplitude_hz = 10e3, double J = 10.0, double delay_s = 50e-3) {
    PulseSegment p1;
    p1.kind = PulseSegment::Kind::pulse;
    p1.amplitude_hz = amplitude_hz;
    p1.phase_deg = 0.0;
    p1.duration_s = 0.25 / amplitude_hz;
    PulseSegment dl;
    dl.kind = PulseSegment::Kind::delay;
    dl.duration_s = delay_s;
    dl.couplings = all_pairs(3, J);
    dl.a = 0.0;
    dl.b = 1.0;
    PulseSegment p2 = p1;
    p2.phase_deg = 90.0;
    return {p1, dl, p2};
}

inline Eigen::VectorXcd basis_ket(const std::string& bits) {
    const int n = static_cast<int>(bits.size());
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    int idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw Error("basis ket needs a bit string");
        idx = 2 * idx + (c - '0');
    }
    v(idx) = 1.0;
    return v;
}

inline Operator pure_density(const Eigen::VectorXcd& psi) {
    const double nrm = psi.norm();
    if (nrm == 0.0) throw Error("state vector is zero");
    const Eigen::VectorXcd v = psi / nrm;
    return v * v.adjoint();
}

inline std::vector<std::string> named_state_names() {
    return {"zero-product", "phi+", "phi-", "psi+", "psi-", "W", "GHZ", "partial-entangled-example"};
}

// Density matrix of a named pure state; zero-product takes the spin count n.
inline Operator named_state(const std::string& name, int n = 2) {
    const double r2 = std::sqrt(2.0);
    if (name == "zero-product") {
        if (n < 1 || n > 5) throw Error("zero-product state: n must be in 1..5");
        return pure_density(basis_ket(std::string(n, '0')));
    }
    if (name == "phi+" || name == "Phi+") return pure_density((basis_ket("00") + basis_ket("11")) / r2);
    if (name == "phi-" || name == "Phi-") return pure_density((basis_ket("00") - basis_ket("11")) / r2);
    if (name == "psi+" || name == "Psi+") return pure_density((basis_ket("01") + basis_ket("10")) / r2);
    if (name == "psi-" || name == "Psi-") return pure_density((basis_ket("01") - basis_ket("10")) / r2);
    if (name == "W") return pure_density((basis_ket("100") + basis_ket("010") + basis_ket("001")) / std::sqrt(3.0));
    if (name == "GHZ") return pure_density((basis_ket("000") + basis_ket("111")) / r2);
    if (name == "partial-entangled-example") {
        const Eigen::VectorXcd psi_minus = (basis_ket("01") - basis_ket("10")) / r2;
        return pure_density(((basis_ket("00") + basis_ket("01")) / r2 + 3.0 * psi_minus) / 4.0);
    }
    throw Error("unknown named state '" + name + "'");
}

// Largest |f| of a droplet: grid search followed by a shrinking pattern search.
template <class Label>
double max_droplet_radius(const Spectrum<Label>& s, const Label& l, int nt = 33, int np = 64) {
    auto radius = [&](double th, double ph) { return std::abs(eval_droplet(s, l, th, ph)); };
    double best = -1.0, bt = 0.0, bp = 0.0;
    for (int i = 0; i < nt; ++i)
        for (int k = 0; k < np; ++k) {
            const double th = std::numbers::pi * i / (nt - 1), ph = 2.0 * std::numbers::pi * k / np;
            const double r = radius(th, ph);
            if (r > best) { best = r; bt = th; bp = ph; }
        }
    double step = std::numbers::pi / (nt - 1);
    while (step > 1e-10) {
        bool moved = false;
        for (const auto& [dt, dp] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}) {
            const double th = std::clamp(bt + dt * step, 0.0, std::numbers::pi), ph = bp + dp * step;
            const double r = radius(th, ph);
            if (r > best) { best = r; bt = th; bp = ph; moved = true; }
        }
        if (!moved) step *= 0.5;
    }
    return best;
}

// Bloch-vector length of spin k from the radius of its linear droplet.
inline double bloch_length(const DropletSpectrum& s, int k) {
    const DropLabel l = make_label({k});
    if (!s.droplets.count(l)) throw Error("bloch_length: spectrum has no droplet for spin " + std::to_string(k));
    const double r = max_droplet_radius(s, l);
    return r * std::sqrt(std::pow(2.0, s.n + 2) * std::numbers::pi / 3.0);
}

inline double concurrence_from_radius(double r1) {
    const double x = 16.0 * std::numbers::pi * r1 * r1 / 3.0;
    if (r1 < 0.0 || x > 1.0 + 1e-9) throw Error("concurrence_from_radius: radius outside the pure two-spin range");
    return std::sqrt(std::max(0.0, 1.0 - std::min(1.0, x)));
}

}  // namespace drops
