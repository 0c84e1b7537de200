#ifndef DJCM_OPERATORS_HPP
#define DJCM_OPERATORS_HPP

#include <Eigen/Dense>

#include "djcm/angular.hpp"
#include "djcm/basis.hpp"

namespace djcm {

/// Photon annihilation operator on the truncated Fock space:
/// a|n> = sqrt(n)|n-1> for n < cutoff. The truncation drops the column that
/// would map |cutoff> down, so [a, a+] = 1 holds only on the subspace
/// n < cutoff - 1; the corner element of the commutator is -cutoff + 1.
Eigen::MatrixXcd annihilation(int cutoff);

/// Atomic operators on the bare atomic space (dimension dim_b + dim_c),
/// ordered per BasisLayout.
struct AtomicOperators {
    Eigen::MatrixXcd S_minus; // sum_m alpha_m |c,m><b,m|
    Eigen::MatrixXcd S_plus;  // adjoint of S_minus
    Eigen::MatrixXcd S_z;     // (1/2) sum_m alpha_m^2 (|b,m><b,m| - |c,m><c,m|)
    Eigen::MatrixXcd n_b;     // projector onto level b
    Eigen::MatrixXcd n_c;     // projector onto level c
    Eigen::MatrixXcd R_b;     // sum_m alpha_m^2 |b,m><b,m|
    Eigen::MatrixXcd R_c;     // sum_m alpha_m^2 |c,m><c,m|
};

AtomicOperators atomic_operators(const LevelSpec& levels, const TransitionCoefficients& coeffs);

/// Dispersive-regime interaction Hamiltonian on the product space:
///   H = (delta/2)(n_b - n_c) + g (a+ S_- + a S_+).
/// delta must be nonzero; outside the dispersive regime sqrt(2) g/|delta|
/// < 1/2 a warning is printed to stderr but construction proceeds.
Eigen::MatrixXcd dispersive_hamiltonian(const LevelSpec& levels,
                                        const TransitionCoefficients& coeffs,
                                        double g, double delta, int cutoff);

/// Effective dispersive Hamiltonian Omega (2 a+ a + 1) S_z, diagonal in the
/// product basis: the eigenvalue on |b,m,n> is +Omega (2n+1) alpha_m^2 / 2
/// and on |c,m,n> its negative.
Eigen::MatrixXcd effective_hamiltonian(const LevelSpec& levels,
                                       const TransitionCoefficients& coeffs,
                                       double omega, int cutoff);

/// Measures how well the first-order small-rotation expansion reproduces
/// the conjugated Hamiltonian. Builds U1 = exp(i sqrt(2)(g/delta) p Sx) and
/// U2 = exp(i sqrt(2)(g/delta) q Sy) by eigendecomposition of the Hermitian
/// generators and returns
///
///   || U2 U1 H U1+ U2+  -  [ (delta/2)(n_b - n_c)
///                            + (g^2/delta)(R_b + R_c)
///                            + (g^2/delta)(2 a+ a + 1) S_z ] ||
///
/// as an operator norm. With exclude_edge (default) the norm is restricted
/// to photon numbers n < cutoff/2 so that truncation artifacts near the
/// Fock edge do not contaminate the result.
double small_rotation_residual(const LevelSpec& levels,
                               const TransitionCoefficients& coeffs,
                               double g, double delta, int cutoff,
                               bool exclude_edge = true);

} // namespace djcm

#endif
