#include "djcm/states.hpp"

#include <cmath>

#include "djcm/errors.hpp"

namespace djcm {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

VectorXcd coherent_vector(std::complex<double> alpha, int cutoff) {
    if (cutoff < 2) throw InvalidInput("coherent_vector: cutoff must be at least 2");
    VectorXcd v(cutoff);
    v(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < cutoff; ++n)
        v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    return v;
}

double coherent_norm_deficit(std::complex<double> alpha, int cutoff) {
    return 1.0 - coherent_vector(alpha, cutoff).squaredNorm();
}

int recommended_cutoff(std::complex<double> alpha) {
    const double n_bar = std::norm(alpha);
    return std::max(2, static_cast<int>(std::ceil(n_bar + 8.0 * std::sqrt(n_bar + 1.0))));
}

MatrixXcd initial_state(const LevelSpec& levels, std::complex<double> alpha, int cutoff) {
    BasisLayout layout(levels, cutoff);
    const double deficit = coherent_norm_deficit(alpha, cutoff);
    if (!(deficit < 1e-10))
        throw CutoffTooSmall("initial_state: coherent norm deficit " + std::to_string(deficit) +
                             " at cutoff " + std::to_string(cutoff) +
                             "; need cutoff >= " + std::to_string(recommended_cutoff(alpha)));

    VectorXcd atom(layout.atom_dim());
    const double wb = 1.0 / std::sqrt(2.0 * levels.dim_b());
    const double wc = 1.0 / std::sqrt(2.0 * levels.dim_c());
    for (int a = 0; a < layout.atom_dim(); ++a)
        atom(a) = (layout.atom_state(a).level == Level::B) ? wb : wc;

    const VectorXcd field = coherent_vector(alpha, cutoff);
    VectorXcd psi(layout.dim());
    for (int a = 0; a < layout.atom_dim(); ++a)
        psi.segment(a * cutoff, cutoff) = atom(a) * field;
    return psi * psi.adjoint();
}

} // namespace djcm
