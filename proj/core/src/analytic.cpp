#include "djcm/analytic.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "djcm/errors.hpp"
#include "djcm/states.hpp"

namespace djcm {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using std::complex;

namespace {

void require_time_and_kappa(double t, double kappa) {
    if (t < 0.0) throw InvalidInput("reservoir functions are defined for t >= 0");
    if (kappa < 0.0) throw InvalidInput("damping constant kappa must be >= 0");
}

} // namespace

double reservoir_gamma(double x, double t, double alpha_sq, double kappa) {
    require_time_and_kappa(t, kappa);
    if (kappa == 0.0 || x == 0.0 || t == 0.0) return 0.0;
    const double e = std::exp(-2.0 * kappa * t);
    const double first = -alpha_sq * (1.0 - e);
    const double pref = alpha_sq * kappa / (kappa * kappa + x * x);
    const double bracket = e * (kappa * std::cos(2.0 * x * t) - x * std::sin(2.0 * x * t)) - kappa;
    return first - pref * bracket;
}

double reservoir_gamma_limit(double x, double alpha_sq, double kappa) {
    if (kappa < 0.0) throw InvalidInput("damping constant kappa must be >= 0");
    if (kappa == 0.0 || x == 0.0) return 0.0;
    return -alpha_sq * x * x / (kappa * kappa + x * x);
}

double reservoir_theta(double x, double t, double alpha_sq, double kappa) {
    require_time_and_kappa(t, kappa);
    if (x == 0.0 || t == 0.0) return 0.0;
    if (kappa == 0.0) return -x * t;
    const double e = std::exp(-2.0 * kappa * t);
    const double pref = alpha_sq * kappa / (kappa * kappa + x * x);
    const double bracket = e * (x * std::cos(2.0 * x * t) + kappa * std::sin(2.0 * x * t)) - x;
    return -x * t + pref * bracket;
}

complex<double> coherent_amplitude(complex<double> alpha, double kappa, double t) {
    require_time_and_kappa(t, kappa);
    return alpha * std::exp(-kappa * t);
}

AnalyticModel::AnalyticModel(const ModelParams& params)
    : AnalyticModel(params,
                    build_frequency_table(params.levels,
                                          build_coefficient_table(params.levels.Jb, params.levels.Jc),
                                          params.omega, params.convention)) {}

AnalyticModel::AnalyticModel(const ModelParams& params, FrequencyTable table)
    : params_(params), table_(std::move(table)) {
    if (params_.omega <= 0.0) throw InvalidInput("model: Omega must be positive");
    if (params_.kappa < 0.0) throw InvalidInput("model: kappa must be >= 0");
    if (params_.cutoff < 2) throw InvalidInput("model: cutoff must be at least 2");
    weight_diag_ = 1.0 / (static_cast<double>(table_.dim_b) * table_.dim_b) +
                   1.0 / (static_cast<double>(table_.dim_c) * table_.dim_c);
    weight_cross_ = 2.0 / (static_cast<double>(table_.dim_b) * table_.dim_c);
    check_weights();
}

void AnalyticModel::check_weights() const {
    // sum over all (m, m') pairs of the diagonal and cross weights; equal to
    // one exactly when the two level dimensions match the common range, which
    // is what makes S(0) = S_A(0) = S_F(0) = 0 and S_F(k t_d) = 0.
    const double n = table_.size();
    const double total = 0.25 * n * n * (weight_diag_ + weight_cross_);
    if (std::abs(total - 1.0) > 1e-12)
        std::cerr << "djcm: warning: entropy weights sum to " << total
                  << " (levels of unequal dimension); entropy formulas are experimental\n";
}

double AnalyticModel::entropy_total(double t) const {
    double sum = 0.0;
    for (int i = 0; i < table_.size(); ++i) {
        for (int j = 0; j < table_.size(); ++j) {
            sum += weight_diag_ *
                   std::exp(2.0 * reservoir_gamma(table_.chi(i, j), t, std::norm(params_.alpha),
                                                  params_.kappa));
            sum += weight_cross_ *
                   std::exp(2.0 * reservoir_gamma(table_.lambda(i, j), t, std::norm(params_.alpha),
                                                  params_.kappa));
        }
    }
    const double s = 1.0 - 0.25 * sum;
    if (s < 0.0 || s >= 1.0)
        throw std::logic_error("entropy_total out of [0, 1): " + std::to_string(s));
    return s;
}

double AnalyticModel::entropy_field(double t) const {
    const double a2t = std::norm(coherent_amplitude(params_.alpha, params_.kappa, t));
    double sum = 0.0;
    for (int i = 0; i < table_.size(); ++i) {
        for (int j = 0; j < table_.size(); ++j) {
            const double sc = std::sin(table_.chi(i, j) * t);
            const double sl = std::sin(table_.lambda(i, j) * t);
            sum += weight_diag_ * std::exp(-4.0 * a2t * sc * sc);
            sum += weight_cross_ * std::exp(-4.0 * a2t * sl * sl);
        }
    }
    const double s = 1.0 - 0.25 * sum;
    if (s < 0.0 || s >= 1.0)
        throw std::logic_error("entropy_field out of [0, 1): " + std::to_string(s));
    return s;
}

double AnalyticModel::entropy_atom(double t) const {
    const double a2 = std::norm(params_.alpha);
    const double a2t = a2 * std::exp(-2.0 * params_.kappa * t);
    double sum = 0.0;
    for (int i = 0; i < table_.size(); ++i) {
        for (int j = 0; j < table_.size(); ++j) {
            const double chi = table_.chi(i, j);
            const double lam = table_.lambda(i, j);
            const double sc = std::sin(chi * t);
            const double sl = std::sin(lam * t);
            sum += weight_diag_ *
                   std::exp(2.0 * reservoir_gamma(chi, t, a2, params_.kappa) - 4.0 * a2t * sc * sc);
            sum += weight_cross_ *
                   std::exp(2.0 * reservoir_gamma(lam, t, a2, params_.kappa) - 4.0 * a2t * sl * sl);
        }
    }
    const double s = 1.0 - 0.25 * sum;
    const double d_atom = table_.dim_b + table_.dim_c;
    if (s < 0.0 || s > 1.0 - 1.0 / d_atom + 1e-12)
        throw std::logic_error("entropy_atom out of [0, 1 - 1/d_A]: " + std::to_string(s));
    return s;
}

MatrixXcd AnalyticModel::reduced_field_density(double t) const {
    const int N = params_.cutoff;
    const complex<double> at = coherent_amplitude(params_.alpha, params_.kappa, t);
    if (!(coherent_norm_deficit(at, N) < 1e-10))
        throw CutoffTooSmall("reduced field density: cutoff " + std::to_string(N) +
                             " too small for |alpha(t)|^2 = " + std::to_string(std::norm(at)));

    const complex<double> I(0.0, 1.0);
    MatrixXcd rho = MatrixXcd::Zero(N, N);
    for (int i = 0; i < table_.size(); ++i) {
        const VectorXcd f = coherent_vector(at * std::exp(-2.0 * I * table_.omega[i] * t), N);
        const VectorXcd g = coherent_vector(at * std::exp(+2.0 * I * table_.omega[i] * t), N);
        rho += (0.5 / table_.dim_b) * f * f.adjoint();
        rho += (0.5 / table_.dim_c) * g * g.adjoint();
    }
    return rho;
}

MatrixXcd AnalyticModel::reduced_atom_density(double t) const {
    if (table_.ms.empty())
        throw InvalidInput("reduced atom density needs a table with atomic structure");
    const BasisLayout layout(params_.levels, 2);
    const int d = layout.atom_dim();
    const double a2 = std::norm(params_.alpha);
    const double a2t = a2 * std::exp(-2.0 * params_.kappa * t);
    const complex<double> I(0.0, 1.0);

    MatrixXcd rho = MatrixXcd::Zero(d, d);
    for (int i = 0; i < table_.size(); ++i) {
        for (int j = 0; j < table_.size(); ++j) {
            const double chi = table_.chi(i, j);
            const double lam = table_.lambda(i, j);
            const double gc = reservoir_gamma(chi, t, a2, params_.kappa);
            const double gl = reservoir_gamma(lam, t, a2, params_.kappa);
            const double hc = reservoir_theta(chi, t, a2, params_.kappa);
            const double hl = reservoir_theta(lam, t, a2, params_.kappa);

            const int bi = layout.atom_index(Level::B, table_.ms[i]);
            const int bj = layout.atom_index(Level::B, table_.ms[j]);
            const int ci = layout.atom_index(Level::C, table_.ms[i]);
            const int cj = layout.atom_index(Level::C, table_.ms[j]);

            const double wb = 0.5 / table_.dim_b;
            const double wc = 0.5 / table_.dim_c;
            const double wx = 0.5 / std::sqrt(static_cast<double>(table_.dim_b) * table_.dim_c);

            rho(bi, bj) += wb * std::exp(complex<double>(gc, hc) -
                                         a2t * (1.0 - std::exp(-2.0 * I * chi * t)));
            rho(ci, cj) += wc * std::exp(complex<double>(gc, -hc) -
                                         a2t * (1.0 - std::exp(+2.0 * I * chi * t)));
            rho(bi, cj) += wx * std::exp(complex<double>(gl, hl) -
                                         a2t * (1.0 - std::exp(-2.0 * I * lam * t)));
            rho(ci, bj) += wx * std::exp(complex<double>(gl, -hl) -
                                         a2t * (1.0 - std::exp(+2.0 * I * lam * t)));
        }
    }
    return rho;
}

MatrixXcd AnalyticModel::full_density(double t) const {
    if (table_.ms.empty())
        throw InvalidInput("full density needs a table with atomic structure");
    const int N = params_.cutoff;
    const BasisLayout layout(params_.levels, N);
    const complex<double> at = coherent_amplitude(params_.alpha, params_.kappa, t);
    if (!(coherent_norm_deficit(at, N) < 1e-10))
        throw CutoffTooSmall("full density: cutoff " + std::to_string(N) +
                             " too small for |alpha(t)|^2 = " + std::to_string(std::norm(at)));

    const double a2 = std::norm(params_.alpha);
    const complex<double> I(0.0, 1.0);

    std::vector<VectorXcd> f(table_.size()), g(table_.size());
    for (int i = 0; i < table_.size(); ++i) {
        f[i] = coherent_vector(at * std::exp(-2.0 * I * table_.omega[i] * t), N);
        g[i] = coherent_vector(at * std::exp(+2.0 * I * table_.omega[i] * t), N);
    }

    MatrixXcd rho = MatrixXcd::Zero(layout.dim(), layout.dim());
    for (int i = 0; i < table_.size(); ++i) {
        for (int j = 0; j < table_.size(); ++j) {
            const double chi = table_.chi(i, j);
            const double lam = table_.lambda(i, j);
            const complex<double> cd(reservoir_gamma(chi, t, a2, params_.kappa),
                                     reservoir_theta(chi, t, a2, params_.kappa));
            const complex<double> cx(reservoir_gamma(lam, t, a2, params_.kappa),
                                     reservoir_theta(lam, t, a2, params_.kappa));

            const int bi = layout.atom_index(Level::B, table_.ms[i]);
            const int bj = layout.atom_index(Level::B, table_.ms[j]);
            const int ci = layout.atom_index(Level::C, table_.ms[i]);
            const int cj = layout.atom_index(Level::C, table_.ms[j]);

            const double wb = 0.5 / table_.dim_b;
            const double wc = 0.5 / table_.dim_c;
            const double wx = 0.5 / std::sqrt(static_cast<double>(table_.dim_b) * table_.dim_c);

            rho.block(bi * N, bj * N, N, N) += wb * std::exp(cd) * (f[i] * f[j].adjoint());
            rho.block(ci * N, cj * N, N, N) += wc * std::exp(std::conj(cd)) * (g[i] * g[j].adjoint());
            rho.block(bi * N, cj * N, N, N) += wx * std::exp(cx) * (f[i] * g[j].adjoint());
            rho.block(ci * N, bj * N, N, N) += wx * std::exp(std::conj(cx)) * (g[i] * f[j].adjoint());
        }
    }
    return rho;
}

double AnalyticModel::disentanglement_period() const {
    return djcm::disentanglement_period(table_);
}

EntropySeries AnalyticModel::series(const std::vector<double>& times_omega) const {
    EntropySeries out;
    out.t_omega = times_omega;
    out.source = SeriesSource::Analytic;
    out.params = params_;
    out.s_total.reserve(times_omega.size());
    out.s_atom.reserve(times_omega.size());
    out.s_field.reserve(times_omega.size());
    for (double to : times_omega) {
        const double t = to / params_.omega;
        out.s_total.push_back(entropy_total(t));
        out.s_atom.push_back(entropy_atom(t));
        out.s_field.push_back(entropy_field(t));
    }
    return out;
}

} // namespace djcm
