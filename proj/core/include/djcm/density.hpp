#ifndef DJCM_DENSITY_HPP
#define DJCM_DENSITY_HPP

#include <Eigen/Dense>

#include "djcm/basis.hpp"

namespace djcm {

/// Linear entropy 1 - Tr(rho^2), computed as 1 - sum |rho_ij|^2 (valid for
/// Hermitian rho).
double linear_entropy(const Eigen::MatrixXcd& rho);

/// Tr_F rho: trace out the photon index, leaving the atomic matrix.
Eigen::MatrixXcd partial_trace_field(const Eigen::MatrixXcd& rho, const BasisLayout& layout);

/// Tr_A rho: trace out the atomic index, leaving the field matrix.
Eigen::MatrixXcd partial_trace_atom(const Eigen::MatrixXcd& rho, const BasisLayout& layout);

struct DensityTolerances {
    double hermiticity = 1e-10; // max |rho - rho+| entry
    double trace = 1e-8;        // |Tr rho - 1|
    double eigen_floor = -1e-8; // smallest admissible eigenvalue
};

struct DensityCheck {
    double hermiticity_residual = 0.0;
    double trace_error = 0.0;
    double min_eigenvalue = 0.0;
    bool spectrum_checked = false;

    bool ok(const DensityTolerances& tol = {}) const {
        return hermiticity_residual <= tol.hermiticity && trace_error <= tol.trace &&
               (!spectrum_checked || min_eigenvalue >= tol.eigen_floor);
    }
};

/// Measures the density-matrix invariants. The eigenvalue check costs a
/// full Hermitian eigensolve; with_spectrum = false skips it.
DensityCheck check_density(const Eigen::MatrixXcd& rho, bool with_spectrum = true);

} // namespace djcm

#endif
