#include "djcm/operators.hpp"

#include <cmath>
#include <complex>
#include <iostream>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "djcm/errors.hpp"

namespace djcm {

using Eigen::MatrixXcd;
using std::complex;

namespace {

void require_matching_table(const LevelSpec& levels, const TransitionCoefficients& coeffs) {
    if (coeffs.Jb != levels.Jb || coeffs.Jc != levels.Jc)
        throw InvalidInput("coefficient table built for different levels than requested");
}

/// exp(i K) for Hermitian K, via eigendecomposition.
MatrixXcd unitary_exp_i(const MatrixXcd& K) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(K);
    const Eigen::VectorXd& w = es.eigenvalues();
    Eigen::VectorXcd phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i)
        phases(i) = std::polar(1.0, w(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace

MatrixXcd annihilation(int cutoff) {
    if (cutoff < 2) throw InvalidInput("annihilation: cutoff must be at least 2");
    MatrixXcd a = MatrixXcd::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n)
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

AtomicOperators atomic_operators(const LevelSpec& levels, const TransitionCoefficients& coeffs) {
    require_matching_table(levels, coeffs);
    const int d = levels.atom_dim();
    BasisLayout layout(levels, 2); // atomic indexing only

    AtomicOperators ops;
    ops.S_minus = MatrixXcd::Zero(d, d);
    ops.S_z = MatrixXcd::Zero(d, d);
    ops.n_b = MatrixXcd::Zero(d, d);
    ops.n_c = MatrixXcd::Zero(d, d);
    ops.R_b = MatrixXcd::Zero(d, d);
    ops.R_c = MatrixXcd::Zero(d, d);

    for (HalfInt m : projection_range(levels.Jb))
        ops.n_b(layout.atom_index(Level::B, m), layout.atom_index(Level::B, m)) = 1.0;
    for (HalfInt m : projection_range(levels.Jc))
        ops.n_c(layout.atom_index(Level::C, m), layout.atom_index(Level::C, m)) = 1.0;

    for (int k = 0; k < coeffs.size(); ++k) {
        const HalfInt m = coeffs.ms[k];
        const double a = coeffs.alpha[k];
        const double a2 = coeffs.alpha_sq[k].to_double();
        const int ib = layout.atom_index(Level::B, m);
        const int ic = layout.atom_index(Level::C, m);
        ops.S_minus(ic, ib) = a;
        ops.S_z(ib, ib) = 0.5 * a2;
        ops.S_z(ic, ic) = -0.5 * a2;
        ops.R_b(ib, ib) = a2;
        ops.R_c(ic, ic) = a2;
    }
    ops.S_plus = ops.S_minus.adjoint();
    return ops;
}

MatrixXcd dispersive_hamiltonian(const LevelSpec& levels, const TransitionCoefficients& coeffs,
                                 double g, double delta, int cutoff) {
    if (delta == 0.0)
        throw InvalidInput("dispersive Hamiltonian: the detuning delta must be nonzero");
    if (std::sqrt(2.0) * std::abs(g / delta) >= 0.5)
        std::cerr << "djcm: warning: sqrt(2) g/delta = " << std::sqrt(2.0) * std::abs(g / delta)
                  << " is outside the dispersive regime\n";

    const AtomicOperators ops = atomic_operators(levels, coeffs);
    const MatrixXcd a = annihilation(cutoff);
    const MatrixXcd I_F = MatrixXcd::Identity(cutoff, cutoff);

    MatrixXcd H = 0.5 * delta * Eigen::kroneckerProduct(ops.n_b - ops.n_c, I_F);
    H += g * (Eigen::kroneckerProduct(ops.S_minus, a.adjoint()) +
              Eigen::kroneckerProduct(ops.S_plus, a));
    return H;
}

MatrixXcd effective_hamiltonian(const LevelSpec& levels, const TransitionCoefficients& coeffs,
                                double omega, int cutoff) {
    if (cutoff < 2) throw InvalidInput("effective Hamiltonian: cutoff must be at least 2");
    const AtomicOperators ops = atomic_operators(levels, coeffs);
    Eigen::VectorXcd photon(cutoff);
    for (int n = 0; n < cutoff; ++n) photon(n) = 2.0 * n + 1.0;
    return omega * Eigen::kroneckerProduct(ops.S_z, MatrixXcd(photon.asDiagonal()));
}

double small_rotation_residual(const LevelSpec& levels, const TransitionCoefficients& coeffs,
                               double g, double delta, int cutoff, bool exclude_edge) {
    if (delta == 0.0)
        throw InvalidInput("small rotation residual: delta must be nonzero");

    const AtomicOperators ops = atomic_operators(levels, coeffs);
    const MatrixXcd a = annihilation(cutoff);
    const MatrixXcd ad = a.adjoint();
    const MatrixXcd I_F = MatrixXcd::Identity(cutoff, cutoff);
    const complex<double> I(0.0, 1.0);

    const MatrixXcd q = (a + ad) / std::sqrt(2.0);
    const MatrixXcd p = I * (ad - a) / std::sqrt(2.0);
    const MatrixXcd S_x = 0.5 * (ops.S_plus + ops.S_minus);
    const MatrixXcd S_y = -0.5 * I * (ops.S_plus - ops.S_minus);

    const double eps = std::sqrt(2.0) * g / delta;
    const MatrixXcd U1 = unitary_exp_i(eps * Eigen::kroneckerProduct(S_x, p).eval());
    const MatrixXcd U2 = unitary_exp_i(eps * Eigen::kroneckerProduct(S_y, q).eval());

    const MatrixXcd H = dispersive_hamiltonian(levels, coeffs, g, delta, cutoff);
    const MatrixXcd rotated = U2 * U1 * H * U1.adjoint() * U2.adjoint();

    Eigen::VectorXcd photon(cutoff);
    for (int n = 0; n < cutoff; ++n) photon(n) = 2.0 * n + 1.0;
    MatrixXcd first_order =
        0.5 * delta * Eigen::kroneckerProduct(ops.n_b - ops.n_c, I_F) +
        (g * g / delta) * Eigen::kroneckerProduct(ops.R_b + ops.R_c, I_F) +
        (g * g / delta) * Eigen::kroneckerProduct(ops.S_z, MatrixXcd(photon.asDiagonal()));

    MatrixXcd diff = rotated - first_order;

    if (exclude_edge) {
        const int window = cutoff / 2;
        const int d_atom = levels.atom_dim();
        MatrixXcd restricted(d_atom * window, d_atom * window);
        for (int ai = 0; ai < d_atom; ++ai)
            for (int aj = 0; aj < d_atom; ++aj)
                restricted.block(ai * window, aj * window, window, window) =
                    diff.block(ai * cutoff, aj * cutoff, window, window);
        diff = restricted;
    }

    // Difference of two Hermitian matrices: the operator norm is the largest
    // absolute eigenvalue.
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

} // namespace djcm
