#include "djcm/lindblad.hpp"

#include <cmath>
#include <complex>
#include <future>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "djcm/errors.hpp"
#include "djcm/operators.hpp"
#include "djcm/states.hpp"

namespace djcm {

using Eigen::MatrixXcd;
using Eigen::VectorXd;
using std::complex;

namespace {

/// 2 kappa a rho a+ shifted-block contribution plus the -(n + n') decay,
/// expressed directly on the product-basis indices.
struct DissipatorGeometry {
    int atom_dim;
    int cutoff;
    Eigen::ArrayXXd shift; // sqrt((n+1)(m+1)), (cutoff-1)^2
    VectorXd nvec;         // photon number per flat index

    explicit DissipatorGeometry(const BasisLayout& layout)
        : atom_dim(layout.atom_dim()), cutoff(layout.cutoff()) {
        shift.resize(cutoff - 1, cutoff - 1);
        for (int n = 0; n < cutoff - 1; ++n)
            for (int m = 0; m < cutoff - 1; ++m)
                shift(n, m) = std::sqrt(static_cast<double>(n + 1) * (m + 1));
        nvec.resize(layout.dim());
        for (int a = 0; a < atom_dim; ++a)
            for (int n = 0; n < cutoff; ++n)
                nvec(layout.index(a, n)) = n;
    }

    void add(MatrixXcd& out, const MatrixXcd& rho, double kappa) const {
        if (kappa == 0.0) return;
        out.array() -= kappa *
            (nvec.array().replicate(1, out.cols()) + nvec.transpose().array().replicate(out.rows(), 1)) *
            rho.array();
        const int N = cutoff;
        for (int a = 0; a < atom_dim; ++a)
            for (int b = 0; b < atom_dim; ++b)
                out.block(a * N, b * N, N - 1, N - 1).array() +=
                    2.0 * kappa * shift * rho.block(a * N + 1, b * N + 1, N - 1, N - 1).array();
    }
};

class Propagator {
public:
    Propagator(const MatrixXcd& H, double kappa, const BasisLayout& layout)
        : H_(H), kappa_(kappa), geom_(layout) {
        diagonal_ = H.cwiseAbs().maxCoeff() == 0.0 ||
                    (H - MatrixXcd(H.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0;
        if (diagonal_) {
            const Eigen::VectorXcd h = H.diagonal();
            W_.resize(H.rows(), H.cols());
            for (Eigen::Index i = 0; i < H.rows(); ++i)
                for (Eigen::Index j = 0; j < H.cols(); ++j)
                    W_(i, j) = complex<double>(0.0, -1.0) * (h(i) - h(j)) -
                               kappa_ * (geom_.nvec(i) + geom_.nvec(j));
        }
    }

    void rhs(const MatrixXcd& rho, MatrixXcd& out) const {
        if (diagonal_) {
            out.array() = W_.array() * rho.array();
            if (kappa_ == 0.0) return;
            const int N = geom_.cutoff;
            for (int a = 0; a < geom_.atom_dim; ++a)
                for (int b = 0; b < geom_.atom_dim; ++b)
                    out.block(a * N, b * N, N - 1, N - 1).array() +=
                        2.0 * kappa_ * geom_.shift *
                        rho.block(a * N + 1, b * N + 1, N - 1, N - 1).array();
            return;
        }
        out.noalias() = rho * H_;
        out.noalias() -= H_ * rho;
        out *= complex<double>(0.0, 1.0);
        geom_.add(out, rho, kappa_);
    }

    /// Upper-ish bound on the Liouvillian spectral radius: the Hamiltonian
    /// part contributes at most 2 ||H|| (Gershgorin bound) and the
    /// dissipator at most about 4 kappa (cutoff - 1).
    double spectral_radius_estimate() const {
        const double h_norm = H_.cwiseAbs().rowwise().sum().maxCoeff();
        return 2.0 * h_norm + 4.0 * kappa_ * (geom_.cutoff - 1);
    }

private:
    MatrixXcd H_;
    double kappa_;
    DissipatorGeometry geom_;
    bool diagonal_ = false;
    MatrixXcd W_;
};

void require_recordable(const MatrixXcd& rho, double t, bool check_positivity) {
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10)
        throw IntegrationDiverged("Hermiticity residual " + std::to_string(herm) +
                                  " at t = " + std::to_string(t), t);
    const double tr_err = std::abs(rho.trace() - complex<double>(1.0, 0.0));
    if (tr_err > 1e-8)
        throw IntegrationDiverged("trace error " + std::to_string(tr_err) +
                                  " at t = " + std::to_string(t), t);
    if (!check_positivity) return;

    // lambda_min(rho) >= -1e-8 iff rho + 1e-8 I is positive definite; the
    // Cholesky test is an order of magnitude cheaper than an eigensolve, so
    // the eigensolve runs only on Cholesky failure.
    MatrixXcd shifted = rho;
    shifted.diagonal().array() += 1e-8;
    Eigen::LLT<MatrixXcd> llt(shifted);
    if (llt.info() == Eigen::Success) return;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -1e-8)
        throw IntegrationDiverged("negative eigenvalue " + std::to_string(min_eig) +
                                  " at t = " + std::to_string(t), t);
}

} // namespace

MatrixXcd lindblad_rhs(const MatrixXcd& rho, const MatrixXcd& H, double kappa,
                       const BasisLayout& layout) {
    if (rho.rows() != layout.dim() || rho.cols() != layout.dim() ||
        H.rows() != layout.dim() || H.cols() != layout.dim())
        throw InvalidInput("lindblad_rhs: dimension mismatch");
    MatrixXcd out = complex<double>(0.0, 1.0) * (rho * H - H * rho);
    DissipatorGeometry(layout).add(out, rho, kappa);
    return out;
}

void evolve(const MatrixXcd& rho0, const MatrixXcd& H, double kappa, const BasisLayout& layout,
            const IntegratorConfig& config, const TrajectoryObserver& observer) {
    if (rho0.rows() != layout.dim() || rho0.cols() != layout.dim() ||
        H.rows() != layout.dim() || H.cols() != layout.dim())
        throw InvalidInput("evolve: dimension mismatch");
    if (config.dt <= 0.0 || config.t_end < 0.0 || config.record_every < 1)
        throw InvalidInput("evolve: bad integrator configuration");
    if (kappa < 0.0) throw InvalidInput("evolve: kappa must be >= 0");

    const DensityCheck initial = check_density(rho0);
    if (!initial.ok())
        throw InvalidInput("evolve: initial state violates density invariants");

    Propagator prop(H, kappa, layout);
    if (config.dt * prop.spectral_radius_estimate() >= 1.0)
        throw InvalidInput("evolve: dt * spectral radius estimate = " +
                           std::to_string(config.dt * prop.spectral_radius_estimate()) +
                           " >= 1; reduce dt");

    MatrixXcd rho = rho0;
    MatrixXcd k1(rho.rows(), rho.cols()), k2(rho.rows(), rho.cols());
    MatrixXcd k3(rho.rows(), rho.cols()), k4(rho.rows(), rho.cols());
    MatrixXcd stage(rho.rows(), rho.cols());

    const long steps = std::lround(config.t_end / config.dt);
    require_recordable(rho, 0.0, config.check_positivity);
    if (observer) observer(0.0, rho);

    const double dt = config.dt;
    for (long s = 1; s <= steps; ++s) {
        prop.rhs(rho, k1);
        stage = rho + (0.5 * dt) * k1;
        prop.rhs(stage, k2);
        stage = rho + (0.5 * dt) * k2;
        prop.rhs(stage, k3);
        stage = rho + dt * k3;
        prop.rhs(stage, k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (s % config.record_every == 0 || s == steps) {
            const double t = s * dt;
            require_recordable(rho, t, config.check_positivity);
            if (observer) observer(t, rho);
        }
    }
}

std::vector<TrajectoryPoint> evolve(const MatrixXcd& rho0, const MatrixXcd& H, double kappa,
                                    const BasisLayout& layout, const IntegratorConfig& config) {
    std::vector<TrajectoryPoint> traj;
    evolve(rho0, H, kappa, layout, config,
           [&traj](double t, const MatrixXcd& rho) { traj.push_back({t, rho}); });
    return traj;
}

namespace {

struct RecordedObservables {
    std::vector<double> t, s_total, s_atom, s_field, photon;
    double max_tail = 0.0;
};

RecordedObservables run_oracle(const MatrixXcd& rho0, const MatrixXcd& H, double kappa,
                               const BasisLayout& layout, const IntegratorConfig& config) {
    RecordedObservables rec;
    const int N = layout.cutoff();
    evolve(rho0, H, kappa, layout, config, [&](double t, const MatrixXcd& rho) {
        rec.t.push_back(t);
        rec.s_total.push_back(linear_entropy(rho));
        rec.s_atom.push_back(linear_entropy(partial_trace_field(rho, layout)));
        const MatrixXcd rho_f = partial_trace_atom(rho, layout);
        rec.s_field.push_back(linear_entropy(rho_f));
        double nbar = 0.0, tail = 0.0;
        for (int n = 0; n < N; ++n) {
            const double p = rho_f(n, n).real();
            nbar += n * p;
            if (n >= N - 5) tail += p;
        }
        rec.photon.push_back(nbar);
        rec.max_tail = std::max(rec.max_tail, tail);
    });
    return rec;
}

} // namespace

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific;
    os << "oracle validation: convention " << convention_name(convention) << ", cutoff " << cutoff
       << ", dt " << dt << ", t_end " << t_end << "\n";
    os << "  max |S      - oracle| = " << max_err_total << "  (tol " << entropy_tolerance << ")\n";
    os << "  max |S_A    - oracle| = " << max_err_atom << "  (tol " << entropy_tolerance << ")\n";
    os << "  max |S_F    - oracle| = " << max_err_field << "  (tol " << entropy_tolerance << ")\n";
    os << "  max photon deviation  = " << max_err_photon << "  (tol " << photon_tolerance << ")\n";
    os << "  dt-halving delta      = " << dt_gate_delta << "\n";
    os << "  photon tail above n = cutoff-5: " << truncation_tail << "\n";
    if (!note.empty()) os << "  note: " << note << "\n";
    os << "status: "
       << (status == Status::Pass ? "PASS" : status == Status::Fail ? "FAIL" : "INCONCLUSIVE")
       << "\n";
    return os.str();
}

ValidationReport validate(const ModelParams& params, const IntegratorConfig& config) {
    ValidationReport report;
    report.convention = params.convention;
    report.cutoff = params.cutoff;
    report.dt = config.dt;
    report.t_end = config.t_end;

    const BasisLayout layout(params.levels, params.cutoff);
    const TransitionCoefficients coeffs =
        build_coefficient_table(params.levels.Jb, params.levels.Jc);
    const MatrixXcd H = effective_hamiltonian(params.levels, coeffs, params.omega, params.cutoff);

    MatrixXcd rho0;
    try {
        rho0 = initial_state(params.levels, params.alpha, params.cutoff);
    } catch (const CutoffTooSmall& e) {
        report.status = ValidationReport::Status::Inconclusive;
        report.note = e.what();
        return report;
    }

    IntegratorConfig half = config;
    half.dt = 0.5 * config.dt;
    half.record_every = 2 * config.record_every;

    auto full_run = std::async(std::launch::async, [&] {
        return run_oracle(rho0, H, params.kappa, layout, config);
    });
    auto half_run = std::async(std::launch::async, [&] {
        return run_oracle(rho0, H, params.kappa, layout, half);
    });
    const RecordedObservables rec = full_run.get();
    const RecordedObservables rec_half = half_run.get();

    report.truncation_tail = std::max(rec.max_tail, rec_half.max_tail);
    if (report.truncation_tail >= 1e-10) {
        report.status = ValidationReport::Status::Inconclusive;
        report.note = "photon population above n = cutoff-5 reached " +
                      std::to_string(report.truncation_tail);
        return report;
    }

    const size_t n = std::min(rec.t.size(), rec_half.t.size());
    for (size_t i = 0; i < n; ++i) {
        report.dt_gate_delta = std::max(
            {report.dt_gate_delta, std::abs(rec.s_total[i] - rec_half.s_total[i]),
             std::abs(rec.s_atom[i] - rec_half.s_atom[i]),
             std::abs(rec.s_field[i] - rec_half.s_field[i])});
    }
    if (report.dt_gate_delta > config.tolerance) {
        report.status = ValidationReport::Status::Inconclusive;
        report.note = "dt-halving moved an entropy by " + std::to_string(report.dt_gate_delta) +
                      " > tolerance";
        return report;
    }

    const AnalyticModel model(params);
    const double a2 = std::norm(params.alpha);
    for (size_t i = 0; i < rec.t.size(); ++i) {
        const double t = rec.t[i];
        report.max_err_total =
            std::max(report.max_err_total, std::abs(rec.s_total[i] - model.entropy_total(t)));
        report.max_err_atom =
            std::max(report.max_err_atom, std::abs(rec.s_atom[i] - model.entropy_atom(t)));
        report.max_err_field =
            std::max(report.max_err_field, std::abs(rec.s_field[i] - model.entropy_field(t)));
        report.max_err_photon = std::max(
            report.max_err_photon,
            std::abs(rec.photon[i] - a2 * std::exp(-2.0 * params.kappa * t)));
    }

    const bool pass = report.max_err_total < report.entropy_tolerance &&
                      report.max_err_atom < report.entropy_tolerance &&
                      report.max_err_field < report.entropy_tolerance &&
                      report.max_err_photon < report.photon_tolerance;
    report.status = pass ? ValidationReport::Status::Pass : ValidationReport::Status::Fail;
    if (!pass && params.convention == FrequencyConvention::PaperText)
        report.note = "paper-text frequencies omega_m = alpha_m Omega disagree with the "
                      "Sz-diagonal oracle, whose sublevel frequencies are alpha_m^2 Omega / 2";
    return report;
}

} // namespace djcm
