#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace drops {

using cplx = std::complex<double>;
using Operator = Eigen::MatrixXcd;

inline constexpr cplx I_unit{0.0, 1.0};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int spin_count(const Operator& a) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw Error("operator must be square");
    int n = 0;
    Eigen::Index d = a.rows();
    while (d > 1) {
        if (d % 2 != 0)
            throw Error("operator dimension is not a power of two");
        d /= 2;
        ++n;
    }
    return n;
}

inline Operator identity(int n) {
    return Operator::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
}

inline Operator kron(const Operator& a, const Operator& b) {
    Operator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Operator kron_all(const std::vector<Operator>& factors) {
    Operator out = Operator::Identity(1, 1);
    for (const auto& f : factors) out = kron(out, f);
    return out;
}

// Spin-1/2 operators I_x, I_y, I_z and the ladder operators I_+, I_-.
inline Operator spin_half(char axis) {
    Operator s = Operator::Zero(2, 2);
    switch (axis) {
        case 'x': s(0, 1) = 0.5; s(1, 0) = 0.5; break;
        case 'y': s(0, 1) = cplx(0, -0.5); s(1, 0) = cplx(0, 0.5); break;
        case 'z': s(0, 0) = 0.5; s(1, 1) = -0.5; break;
        case '+': s(0, 1) = 1.0; break;
        case '-': s(1, 0) = 1.0; break;
        case '1': s(0, 0) = 1.0; s(1, 1) = 1.0; break;
        default: throw Error(std::string("unknown spin axis '") + axis + "'");
    }
    return s;
}

// Single-spin operator placed on spin k (1-based) of an n-spin system.
inline Operator embed(const Operator& single, int k, int n) {
    if (k < 1 || k > n)
        throw Error("embed: spin index out of range");
    Operator out = Operator::Identity(1, 1);
    for (int p = 1; p <= n; ++p)
        out = kron(out, p == k ? single : Operator::Identity(single.rows(), single.cols()));
    return out;
}

inline Operator total_spin(char axis, const std::vector<int>& spins, int n) {
    Operator out = Operator::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    const Operator s = spin_half(axis);
    for (int k : spins) out += embed(s, k, n);
    return out;
}

inline Operator total_spin(char axis, int n) {
    std::vector<int> all(n);
    for (int k = 0; k < n; ++k) all[k] = k + 1;
    return total_spin(axis, all, n);
}

// Tr(a^dagger b)
inline cplx frobenius(const Operator& a, const Operator& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("frobenius: dimension mismatch");
    cplx s = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) s += std::conj(a(i, j)) * b(i, j);
    return s;
}

inline Operator commutator(const Operator& a, const Operator& b) {
    if (a.rows() != b.rows())
        throw Error("commutator: dimension mismatch");
    return a * b - b * a;
}

inline double max_abs(const Operator& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Operator& a, double tol = 1e-12) {
    return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

inline bool is_unitary(const Operator& u, double tol = 1e-10) {
    return u.rows() == u.cols() &&
           max_abs(u * u.adjoint() - Operator::Identity(u.rows(), u.cols())) <= tol;
}

// U = exp(-i h t) through the eigendecomposition of the Hermitian generator.
inline Operator exp_hermitian(const Operator& h, double t) {
    if (!is_hermitian(h, 1e-10 * std::max(1.0, max_abs(h))))
        throw Error("exp_hermitian: generator is not Hermitian");
    const Operator hs = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> es(hs);
    const auto& v = es.eigenvectors();
    Eigen::VectorXcd ph(v.cols());
    for (Eigen::Index k = 0; k < v.cols(); ++k)
        ph(k) = std::exp(cplx(0.0, -es.eigenvalues()(k) * t));
    return v * ph.asDiagonal() * v.adjoint();
}

// H = (i/T) log(u), principal branch with eigenphases in (-pi, pi].
// Phases within branch_tol of the cut are rejected rather than guessed.
inline Operator log_unitary_principal(const Operator& u, double T, double branch_tol = 1e-9) {
    if (!(T > 0.0))
        throw Error("log_unitary_principal: T must be positive");
    if (!is_unitary(u, 1e-10))
        throw Error("log_unitary_principal: input is not unitary");
    // For a normal matrix the complex Schur form is diagonal and Q is unitary.
    Eigen::ComplexSchur<Operator> cs(u);
    const Operator& q = cs.matrixU();
    const Operator& t = cs.matrixT();
    Eigen::VectorXcd d(t.rows());
    for (Eigen::Index k = 0; k < t.rows(); ++k) {
        double phase = std::arg(t(k, k));
        if (std::numbers::pi - std::abs(phase) <= branch_tol)
            throw Error("log_unitary_principal: eigenphase on the branch cut at -pi/pi");
        // log(e^{i phase}) = i phase, so H eigenvalue = (i/T)(i phase) = -phase/T
        d(k) = -phase / T;
    }
    Operator h = q * d.asDiagonal() * q.adjoint();
    return 0.5 * (h + h.adjoint());
}

// Trace over all spins not in keep (1-based indices); spin 1 is the leftmost factor.
inline Operator partial_trace(const Operator& rho, int n, const std::set<int>& keep) {
    if (keep.empty())
        throw Error("partial_trace: keep set is empty");
    if (rho.rows() != (Eigen::Index{1} << n) || rho.cols() != rho.rows())
        throw Error("partial_trace: dimension does not match spin count");
    for (int k : keep)
        if (k < 1 || k > n)
            throw Error("partial_trace: spin index out of range");
    std::vector<int> kept(keep.begin(), keep.end());
    std::vector<int> traced;
    for (int k = 1; k <= n; ++k)
        if (!keep.count(k)) traced.push_back(k);
    const int nk = static_cast<int>(kept.size());
    const int nt = static_cast<int>(traced.size());
    auto bit = [n](int k) { return n - k; };
    auto compose = [&](int a, int t) {
        int idx = 0;
        for (int p = 0; p < nk; ++p)
            if ((a >> (nk - 1 - p)) & 1) idx |= 1 << bit(kept[p]);
        for (int p = 0; p < nt; ++p)
            if ((t >> (nt - 1 - p)) & 1) idx |= 1 << bit(traced[p]);
        return idx;
    };
    const int dk = 1 << nk, dt = 1 << nt;
    Operator out = Operator::Zero(dk, dk);
    for (int a = 0; a < dk; ++a)
        for (int b = 0; b < dk; ++b) {
            cplx s = 0.0;
            for (int t = 0; t < dt; ++t) s += rho(compose(a, t), compose(b, t));
            out(a, b) = s;
        }
    return out;
}

}  // namespace drops
