#pragma once

#include "tensorbasis.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <random>

namespace drops {

// Droplet spectrum: per label, coefficients c_{j,m} keyed by (j, m).
template <class Label>
struct Spectrum {
    int n = 0;
    std::map<Label, std::map<std::pair<int, int>, cplx>> droplets;

    cplx coefficient(const Label& l, int j, int m) const {
        auto it = droplets.find(l);
        if (it == droplets.end()) return 0.0;
        auto c = it->second.find({j, m});
        return c == it->second.end() ? cplx(0.0) : c->second;
    }

    double droplet_norm(const Label& l) const {
        auto it = droplets.find(l);
        if (it == droplets.end()) return 0.0;
        double s = 0.0;
        for (const auto& [jm, c] : it->second) s += std::norm(c);
        return std::sqrt(s);
    }

    std::vector<Label> nonempty(double tol = 1e-12) const {
        std::vector<Label> out;
        for (const auto& [l, terms] : droplets)
            if (droplet_norm(l) > tol) out.push_back(l);
        return out;
    }
};

using DropletSpectrum = Spectrum<DropLabel>;

// Basis requirements: int n; tensors with .label, .j and operator[](m).
template <class Basis>
auto decompose(const Operator& a, const Basis& basis) {
    using Label = std::decay_t<decltype(basis.tensors.front().label)>;
    const Eigen::Index d = Eigen::Index{1} << basis.n;
    if (a.rows() != d || a.cols() != d) throw Error("decompose: operator dimension does not match the basis");
    Spectrum<Label> s;
    s.n = basis.n;
    for (const auto& t : basis.tensors) {
        auto& terms = s.droplets[t.label];
        for (int m = -t.j; m <= t.j; ++m) terms[{t.j, m}] = frobenius(t[m], a);
    }
    return s;
}

template <class Basis, class Label>
Operator reconstruct(const Spectrum<Label>& s, const Basis& basis) {
    if (s.n != basis.n) throw Error("reconstruct: spectrum and basis differ in spin count");
    const Eigen::Index d = Eigen::Index{1} << basis.n;
    Operator out = Operator::Zero(d, d);
    std::map<Label, int> seen;
    for (const auto& t : basis.tensors) {
        auto it = s.droplets.find(t.label);
        if (it == s.droplets.end()) continue;
        ++seen[t.label];
        for (int m = -t.j; m <= t.j; ++m) {
            auto c = it->second.find({t.j, m});
            if (c != it->second.end()) out += c->second * t[m];
        }
    }
    for (const auto& [l, terms] : s.droplets)
        if (!seen.count(l)) throw Error("reconstruct: label not present in the basis");
    return out;
}

// Complex orthonormal Y_{j,m} with the Condon-Shortley phase.
inline cplx spherical_harmonic(int j, int m, double theta, double phi) {
    if (j < 0 || std::abs(m) > j) throw Error("spherical_harmonic: need |m| <= j");
    const int am = std::abs(m);
    const cplx y = std::sph_legendre(static_cast<unsigned>(j), static_cast<unsigned>(am), theta) *
                   std::exp(cplx(0.0, am * phi));
    if (m >= 0) return y;
    return (am % 2 ? -1.0 : 1.0) * std::conj(y);
}

template <class Label>
cplx eval_droplet(const Spectrum<Label>& s, const Label& l, double theta, double phi) {
    auto it = s.droplets.find(l);
    if (it == s.droplets.end()) throw Error("eval_droplet: label not in spectrum");
    cplx f = 0.0;
    for (const auto& [jm, c] : it->second)
        if (c != 0.0) f += c * spherical_harmonic(jm.first, jm.second, theta, phi);
    return f;
}

struct SphericalSample {
    double theta = 0.0;
    double phi = 0.0;
    cplx value = 0.0;
};

struct QuadratureNode {
    double theta = 0.0;
    double phi = 0.0;
    double weight = 0.0;
};

// Gauss-Legendre in cos(theta) times a uniform phi rule (Golub-Welsch nodes).
inline std::vector<QuadratureNode> sphere_quadrature(int max_degree) {
    if (max_degree < 0) throw Error("sphere_quadrature: degree must be non-negative");
    const int nt = (max_degree + 2) / 2;
    const int np = max_degree + 1;
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(nt, nt);
    for (int k = 1; k < nt; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        jac(k, k - 1) = jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    std::vector<QuadratureNode> nodes;
    nodes.reserve(static_cast<std::size_t>(nt) * np);
    const double dphi = 2.0 * std::numbers::pi / np;
    for (int a = 0; a < nt; ++a) {
        const double x = es.eigenvalues()(a);
        const double w = 2.0 * es.eigenvectors()(0, a) * es.eigenvectors()(0, a);
        for (int b = 0; b < np; ++b) nodes.push_back({std::acos(x), b * dphi, w * dphi});
    }
    return nodes;
}

// Regular grid closed at the poles: theta_i = pi i/(nt-1), phi_k = 2 pi k/np.
template <class Label>
std::vector<SphericalSample> sample_droplet(const Spectrum<Label>& s, const Label& l, int nt = 64, int np = 128) {
    if (nt < 2 || np < 1) throw Error("sample_droplet: grid too small");
    std::vector<SphericalSample> out;
    out.reserve(static_cast<std::size_t>(nt) * np);
    for (int i = 0; i < nt; ++i) {
        const double th = std::numbers::pi * i / (nt - 1);
        for (int k = 0; k < np; ++k) {
            const double ph = 2.0 * std::numbers::pi * k / np;
            out.push_back({th, ph, eval_droplet(s, l, th, ph)});
        }
    }
    return out;
}

inline Eigen::Vector3d unit_vector(char axis) {
    switch (axis) {
        case 'x': return Eigen::Vector3d::UnitX();
        case 'y': return Eigen::Vector3d::UnitY();
        case 'z': return Eigen::Vector3d::UnitZ();
        default: throw Error(std::string("unknown rotation axis '") + axis + "'");
    }
}

// Non-selective rotation U = exp(-i alpha n.J) on n spins.
inline Operator rotation_operator(const Eigen::Vector3d& axis, double alpha, int n) {
    const Eigen::Vector3d u = axis.normalized();
    const Operator h = u.x() * total_spin('x', n) + u.y() * total_spin('y', n) + u.z() * total_spin('z', n);
    return exp_hermitian(h, alpha);
}

// (theta, phi) of R^{-1} applied to the point, R the active rotation by alpha about axis.
inline std::pair<double, double> inverse_rotate_point(const Eigen::Vector3d& axis, double alpha, double theta, double phi) {
    const Eigen::Vector3d p(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
    const Eigen::Vector3d q = Eigen::AngleAxisd(-alpha, axis.normalized()) * p;
    const double th = std::acos(std::clamp(q.z(), -1.0, 1.0));
    double ph = std::atan2(q.y(), q.x());
    if (ph < 0) ph += 2.0 * std::numbers::pi;
    return {th, ph};
}

template <class Basis>
double check_covariance(const Operator& a, const Eigen::Vector3d& axis, double alpha, const Basis& basis,
                        int nt = 32, int np = 64) {
    const Operator u = rotation_operator(axis, alpha, basis.n);
    const auto s0 = decompose(a, basis);
    const auto s1 = decompose(Operator(u * a * u.adjoint()), basis);
    double dev = 0.0;
    for (const auto& [l, terms] : s0.droplets)
        for (int i = 0; i < nt; ++i)
            for (int k = 0; k < np; ++k) {
                const double th = std::numbers::pi * (i + 0.5) / nt;
                const double ph = 2.0 * std::numbers::pi * k / np;
                const auto [th0, ph0] = inverse_rotate_point(axis, alpha, th, ph);
                dev = std::max(dev, std::abs(eval_droplet(s1, l, th, ph) - eval_droplet(s0, l, th0, ph0)));
            }
    return dev;
}

template <class Basis>
double check_covariance(const Operator& a, char axis, double alpha, const Basis& basis, int nt = 32, int np = 64) {
    return check_covariance(a, unit_vector(axis), alpha, basis, nt, np);
}

struct PropertyDeviation {
    double coefficient = 0.0;
    double quadrature = 0.0;
};

// Maximum deviations for properties (a) linearity, (b) reality, (c) norm, (d) covariance, (e) trace.
struct WignerReport {
    PropertyDeviation linearity, reality, norm, covariance, trace;

    double max_coefficient() const {
        return std::max({linearity.coefficient, reality.coefficient, norm.coefficient, covariance.coefficient, trace.coefficient});
    }
    double max_quadrature() const {
        return std::max({linearity.quadrature, reality.quadrature, norm.quadrature, covariance.quadrature, trace.quadrature});
    }
};

struct WignerOptions {
    int degree = 8;
    std::uint64_t seed = 7;
};

namespace detail {

// Sum over droplets of the integral of f_A f_B, in coefficient space.
template <class Label>
cplx pairing_coefficients(const Spectrum<Label>& a, const Spectrum<Label>& b) {
    cplx s = 0.0;
    for (const auto& [l, terms] : a.droplets)
        for (const auto& [jm, c] : terms) {
            const int m = jm.second;
            s += (m % 2 ? -1.0 : 1.0) * c * b.coefficient(l, jm.first, -m);
        }
    return s;
}

template <class Label>
cplx pairing_quadrature(const Spectrum<Label>& a, const Spectrum<Label>& b, const std::vector<QuadratureNode>& q) {
    cplx s = 0.0;
    for (const auto& [l, terms] : a.droplets)
        for (const auto& nd : q) s += nd.weight * eval_droplet(a, l, nd.theta, nd.phi) * eval_droplet(b, l, nd.theta, nd.phi);
    return s;
}

inline double rel(double dev, double scale) { return dev / std::max(1.0, scale); }

}  // namespace detail

template <class Basis>
WignerReport check_wigner_properties(const Operator& a, const Operator& b, const Basis& basis, const WignerOptions& opt = {}) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("check_wigner_properties: dimension mismatch");
    const int n = basis.n;
    const Eigen::Index d = Eigen::Index{1} << n;
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const cplx alpha(gauss(rng), gauss(rng)), beta(gauss(rng), gauss(rng));
    const auto q = sphere_quadrature(opt.degree);

    const auto sa = decompose(a, basis);
    const auto sb = decompose(b, basis);
    const auto sid = decompose(Operator(Operator::Identity(d, d)), basis);
    WignerReport r;

    // (a)
    const auto slin = decompose(Operator(alpha * a + beta * b), basis);
    for (const auto& [l, terms] : slin.droplets) {
        for (const auto& [jm, c] : terms)
            r.linearity.coefficient = std::max(r.linearity.coefficient,
                std::abs(c - alpha * sa.coefficient(l, jm.first, jm.second) - beta * sb.coefficient(l, jm.first, jm.second)));
        for (const auto& nd : q)
            r.linearity.quadrature = std::max(r.linearity.quadrature,
                std::abs(eval_droplet(slin, l, nd.theta, nd.phi) - alpha * eval_droplet(sa, l, nd.theta, nd.phi) -
                         beta * eval_droplet(sb, l, nd.theta, nd.phi)));
    }

    // (b)
    const auto sdag = decompose(Operator(a.adjoint()), basis);
    for (const auto& [l, terms] : sdag.droplets) {
        for (const auto& [jm, c] : terms) {
            const int m = jm.second;
            const cplx want = (m % 2 ? -1.0 : 1.0) * std::conj(sa.coefficient(l, jm.first, -m));
            r.reality.coefficient = std::max(r.reality.coefficient, std::abs(c - want));
        }
        for (const auto& nd : q)
            r.reality.quadrature = std::max(r.reality.quadrature,
                std::abs(eval_droplet(sdag, l, nd.theta, nd.phi) - std::conj(eval_droplet(sa, l, nd.theta, nd.phi))));
    }

    // (c)
    const cplx tr = a.trace();
    r.norm.coefficient = std::abs(detail::pairing_coefficients(sa, sid) - tr);
    r.norm.quadrature = std::abs(detail::pairing_quadrature(sa, sid, q) - tr);

    // (d): coefficient form uses z rotations (exact phase e^{-i m alpha}) and the
    // rotation invariance of each rank's power for a random axis; quadrature form rotates points.
    {
        const double az = angle(rng);
        const Operator uz = rotation_operator(Eigen::Vector3d::UnitZ(), az, n);
        const auto sz = decompose(Operator(uz * a * uz.adjoint()), basis);
        for (const auto& [l, terms] : sz.droplets)
            for (const auto& [jm, c] : terms)
                r.covariance.coefficient = std::max(r.covariance.coefficient,
                    std::abs(c - std::exp(cplx(0.0, -jm.second * az)) * sa.coefficient(l, jm.first, jm.second)));
        const Eigen::Vector3d axis(gauss(rng), gauss(rng), gauss(rng));
        const double al = angle(rng);
        const Operator u = rotation_operator(axis, al, n);
        const auto sr = decompose(Operator(u * a * u.adjoint()), basis);
        for (const auto& [l, terms] : sr.droplets) {
            std::map<int, double> p0, p1;
            for (const auto& [jm, c] : terms) {
                p1[jm.first] += std::norm(c);
                p0[jm.first] += std::norm(sa.coefficient(l, jm.first, jm.second));
            }
            for (const auto& [j, v] : p1)
                r.covariance.coefficient = std::max(r.covariance.coefficient, std::abs(std::sqrt(v) - std::sqrt(p0[j])));
            for (const auto& nd : q) {
                const auto [th0, ph0] = inverse_rotate_point(axis, al, nd.theta, nd.phi);
                r.covariance.quadrature = std::max(r.covariance.quadrature,
                    std::abs(eval_droplet(sr, l, nd.theta, nd.phi) - eval_droplet(sa, l, th0, ph0)));
            }
        }
    }

    // (e)
    const cplx trab = (a * b).trace();
    r.trace.coefficient = std::abs(detail::pairing_coefficients(sa, sb) - trab);
    r.trace.quadrature = std::abs(detail::pairing_quadrature(sa, sb, q) - trab);
    return r;
}

// Sum over droplets of the integral of f_A f_Id: the generalized norm condition.
template <class Basis>
cplx weighted_norm_integral(const Operator& a, const Basis& basis, int degree = 8) {
    const Eigen::Index d = Eigen::Index{1} << basis.n;
    return detail::pairing_quadrature(decompose(a, basis), decompose(Operator(Operator::Identity(d, d)), basis),
                                      sphere_quadrature(degree));
}

// Plain integral of all droplets, without the f_Id weighting.
template <class Label>
cplx unweighted_integral(const Spectrum<Label>& s, int degree = 8) {
    cplx total = 0.0;
    for (const auto& nd : sphere_quadrature(degree))
        for (const auto& [l, terms] : s.droplets) total += nd.weight * eval_droplet(s, l, nd.theta, nd.phi);
    return total;
}

// Coherence-order parts A_p assembled from components with m = p.
template <class Basis>
std::map<int, Operator> coherence_orders(const Operator& a, const Basis& basis, double tol = 1e-12) {
    const auto s = decompose(a, basis);
    std::map<int, Operator> parts;
    const Eigen::Index d = Eigen::Index{1} << basis.n;
    for (const auto& t : basis.tensors) {
        const auto& terms = s.droplets.at(t.label);
        for (int m = -t.j; m <= t.j; ++m) {
            const cplx c = terms.at({t.j, m});
            if (std::abs(c) <= tol) continue;
            auto it = parts.try_emplace(m, Operator::Zero(d, d)).first;
            it->second += c * t[m];
        }
    }
    return parts;
}

// Deviation of A_p from the z-rotation law A_p -> A_p exp(-i p alpha).
inline double coherence_deviation(const std::map<int, Operator>& parts, int n, double alpha) {
    const Operator u = rotation_operator(Eigen::Vector3d::UnitZ(), alpha, n);
    double dev = 0.0;
    for (const auto& [p, ap] : parts)
        dev = std::max(dev, max_abs(u * ap * u.adjoint() - std::exp(cplx(0.0, -p * alpha)) * ap));
    return dev;
}

// Drops every label whose spins are not all in keep and relabels the rest onto
// spins 1..|keep|. Coefficients pick up sqrt(2) per traced spin, so the result
// reconstructs the partial trace in the smaller basis.
inline DropletSpectrum reduce_spectrum(const DropletSpectrum& s, const std::set<int>& keep) {
    if (keep.empty()) throw Error("reduce_spectrum: keep set is empty");
    for (int k : keep)
        if (k < 1 || k > s.n) throw Error("reduce_spectrum: spin index out of range");
    std::map<int, int> to_new;
    int next = 1;
    for (int k : keep) to_new[k] = next++;
    const int nk = static_cast<int>(keep.size());
    const double scale = std::pow(std::sqrt(2.0), s.n - nk);
    DropletSpectrum out;
    out.n = nk;
    for (const auto& [l, terms] : s.droplets) {
        if (!std::all_of(l.G.begin(), l.G.end(), [&](int k) { return keep.count(k) > 0; })) continue;
        DropLabel nl = l;
        for (auto& k : nl.G) k = to_new.at(k);
        if (nl.tau)
            for (auto& row : nl.tau->rows)
                for (auto& e : row) e = to_new.at(e);
        auto& dst = out.droplets[nl];
        for (const auto& [jm, c] : terms) dst[jm] = scale * c;
    }
    return out;
}

}  // namespace drops
