#include "djcm/density.hpp"

#include <Eigen/Eigenvalues>

#include "djcm/errors.hpp"

namespace djcm {

using Eigen::MatrixXcd;

double linear_entropy(const MatrixXcd& rho) {
    return 1.0 - rho.squaredNorm();
}

MatrixXcd partial_trace_field(const MatrixXcd& rho, const BasisLayout& layout) {
    if (rho.rows() != layout.dim() || rho.cols() != layout.dim())
        throw InvalidInput("partial_trace_field: dimension mismatch");
    const int d = layout.atom_dim();
    const int N = layout.cutoff();
    MatrixXcd out = MatrixXcd::Zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            out(a, b) = rho.block(a * N, b * N, N, N).trace();
    return out;
}

MatrixXcd partial_trace_atom(const MatrixXcd& rho, const BasisLayout& layout) {
    if (rho.rows() != layout.dim() || rho.cols() != layout.dim())
        throw InvalidInput("partial_trace_atom: dimension mismatch");
    const int d = layout.atom_dim();
    const int N = layout.cutoff();
    MatrixXcd out = MatrixXcd::Zero(N, N);
    for (int a = 0; a < d; ++a)
        out += rho.block(a * N, a * N, N, N);
    return out;
}

DensityCheck check_density(const MatrixXcd& rho, bool with_spectrum) {
    DensityCheck c;
    c.hermiticity_residual = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    c.trace_error = std::abs(rho.trace() - std::complex<double>(1.0, 0.0));
    if (with_spectrum) {
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
        c.min_eigenvalue = es.eigenvalues().minCoeff();
        c.spectrum_checked = true;
    }
    return c;
}

} // namespace djcm
