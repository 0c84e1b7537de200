#ifndef DJCM_ANALYTIC_HPP
#define DJCM_ANALYTIC_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "djcm/basis.hpp"
#include "djcm/frequency.hpp"

namespace djcm {

/// Reservoir decoherence exponent
///
///   Gamma(x,t) = -|a|^2 (1 - e^{-2kt})
///                - |a|^2 k/(k^2+x^2) [ e^{-2kt}(k cos 2xt - x sin 2xt) - k ].
///
/// Gamma <= 0; it vanishes identically for k = 0, at t = 0, and at x = 0
/// (where the two terms cancel algebraically). Those corners are explicit
/// branches returning exact zeros, never 0/0 arithmetic.
double reservoir_gamma(double x, double t, double alpha_sq, double kappa);

/// t -> infinity limit of reservoir_gamma: -|a|^2 x^2/(k^2 + x^2).
double reservoir_gamma_limit(double x, double alpha_sq, double kappa);

/// Reservoir phase
///
///   Theta(x,t) = -xt + |a|^2 k/(k^2+x^2) [ e^{-2kt}(x cos 2xt + k sin 2xt) - x ].
///
/// Theta(0,t) = Theta(x,0) = 0 exactly; for k = 0 it reduces to -xt.
double reservoir_theta(double x, double t, double alpha_sq, double kappa);

/// Coherent amplitude under zero-temperature cavity damping: alpha e^{-kt}.
std::complex<double> coherent_amplitude(std::complex<double> alpha, double kappa, double t);

/// Physical parameters of a run. omega is the effective dispersive
/// frequency Omega = g^2/delta; all times are quoted in 1/Omega units when
/// omega = 1.
struct ModelParams {
    LevelSpec levels;
    double omega = 1.0;
    double kappa = 0.0;
    std::complex<double> alpha;
    FrequencyConvention convention = FrequencyConvention::PaperText;
    int cutoff = 2; // used only by the matrix-valued outputs
};

enum class SeriesSource { Analytic, Oracle };

struct EntropySeries {
    std::vector<double> t_omega; // Omega * t grid
    std::vector<double> s_total, s_atom, s_field;
    SeriesSource source = SeriesSource::Analytic;
    ModelParams params;
};

/// Closed-form solution: the three linear entropies and the full/reduced
/// density matrices. Entropy sums run over the common projection range of
/// the two levels; for Jb != Jc the normalization identities behind
/// S(0) = 0 fail and the formulas are not meaningful, so construction is
/// restricted to Jb == Jc.
class AnalyticModel {
public:
    explicit AnalyticModel(const ModelParams& params);
    AnalyticModel(const ModelParams& params, FrequencyTable table);

    const ModelParams& params() const { return params_; }
    const FrequencyTable& table() const { return table_; }

    double entropy_total(double t) const;
    double entropy_atom(double t) const;
    double entropy_field(double t) const;

    /// Field density in the truncated Fock basis: the coherent mixture
    /// (1/2) sum_m [ |f_m><f_m|/(2Jb+1) + |g_m><g_m|/(2Jc+1) ] with
    /// f_m = alpha(t) e^{-2 i omega_m t}, g_m its conjugate-phase partner.
    Eigen::MatrixXcd reduced_field_density(double t) const;

    /// Atomic density over both levels' sublevels, closed form.
    Eigen::MatrixXcd reduced_atom_density(double t) const;

    /// Full system density on the product basis of BasisLayout.
    Eigen::MatrixXcd full_density(double t) const;

    double disentanglement_period() const;

    EntropySeries series(const std::vector<double>& times_omega) const;

private:
    ModelParams params_;
    FrequencyTable table_;
    double weight_diag_;  // 1/(2Jb+1)^2 + 1/(2Jc+1)^2
    double weight_cross_; // 2/((2Jb+1)(2Jc+1))

    void check_weights() const;
};

} // namespace djcm

#endif
