#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "djcm/analytic.hpp"
#include "djcm/density.hpp"
#include "djcm/errors.hpp"
#include "djcm/lindblad.hpp"
#include "djcm/operators.hpp"
#include "djcm/states.hpp"

#include <unsupported/Eigen/KroneckerProduct>

using djcm::BasisLayout;
using djcm::HalfInt;
using djcm::IntegratorConfig;
using djcm::Level;
using djcm::LevelSpec;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using std::complex;

namespace {

const LevelSpec kRubidium{HalfInt::from_twice(3), HalfInt::from_twice(3)};

MatrixXcd random_hermitian(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = complex<double>(g(rng), g(rng));
    return 0.5 * (m + m.adjoint()).eval();
}

MatrixXcd random_density(int n, unsigned seed) {
    MatrixXcd h = random_hermitian(n, seed);
    MatrixXcd rho = h * h.adjoint();
    return rho / rho.trace().real();
}

} // namespace

TEST_CASE("linear entropy basics") {
    VectorXcd psi = VectorXcd::Random(9);
    psi.normalize();
    CHECK(djcm::linear_entropy(psi * psi.adjoint()) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

    const int d = 7;
    CHECK(djcm::linear_entropy(MatrixXcd::Identity(d, d) / double(d)) ==
          doctest::Approx(1.0 - 1.0 / d).epsilon(1e-14));

    MatrixXcd mix = MatrixXcd::Zero(4, 4);
    mix(0, 0) = 0.5;
    mix(2, 2) = 0.5;
    CHECK(djcm::linear_entropy(mix) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("partial traces") {
    const LevelSpec qubit{HalfInt::whole(0), HalfInt::whole(0)}; // two atomic states
    BasisLayout layout(qubit, 2);

    SUBCASE("product state splits into its factors") {
        const MatrixXcd a = random_density(2, 7);
        const MatrixXcd f = random_density(2, 8);
        const MatrixXcd rho = Eigen::kroneckerProduct(a, f);
        CHECK((djcm::partial_trace_field(rho, layout) - a).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((djcm::partial_trace_atom(rho, layout) - f).cwiseAbs().maxCoeff() < 1e-14);
    }

    SUBCASE("maximally entangled state reduces to maximally mixed") {
        VectorXcd bell = VectorXcd::Zero(4);
        bell(layout.index(0, 0)) = 1.0 / std::sqrt(2.0);
        bell(layout.index(1, 1)) = 1.0 / std::sqrt(2.0);
        const MatrixXcd rho = bell * bell.adjoint();
        const MatrixXcd half = 0.5 * MatrixXcd::Identity(2, 2);
        CHECK((djcm::partial_trace_field(rho, layout) - half).cwiseAbs().maxCoeff() < 1e-15);
        CHECK((djcm::partial_trace_atom(rho, layout) - half).cwiseAbs().maxCoeff() < 1e-15);
    }

    SUBCASE("trace is preserved") {
        const MatrixXcd rho = random_density(4, 9);
        CHECK(std::abs(djcm::partial_trace_atom(rho, layout).trace() - rho.trace()) < 1e-12);
        CHECK(std::abs(djcm::partial_trace_field(rho, layout).trace() - rho.trace()) < 1e-12);
    }

    CHECK_THROWS_AS(djcm::partial_trace_field(MatrixXcd::Zero(3, 3), layout), djcm::InvalidInput);
}

TEST_CASE("master equation right side") {
    const auto coeffs = djcm::build_coefficient_table(kRubidium.Jb, kRubidium.Jc);
    const int N = 12;
    BasisLayout layout(kRubidium, N);
    const MatrixXcd H = djcm::effective_hamiltonian(kRubidium, coeffs, 1.0, N);

    SUBCASE("diagonal rho, diagonal H, kappa = 0: commutator vanishes") {
        MatrixXcd rho = MatrixXcd::Zero(layout.dim(), layout.dim());
        for (int i = 0; i < layout.dim(); ++i) rho(i, i) = 1.0 / layout.dim();
        CHECK(djcm::lindblad_rhs(rho, H, 0.0, layout).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("vacuum field is dark for the dissipator") {
        VectorXcd vac = VectorXcd::Zero(N);
        vac(0) = 1.0;
        const MatrixXcd rho_f = vac * vac.adjoint();
        const MatrixXcd rho = Eigen::kroneckerProduct(random_density(8, 3), rho_f);
        const MatrixXcd out = djcm::lindblad_rhs(rho, MatrixXcd::Zero(layout.dim(), layout.dim()),
                                                 0.7, layout);
        CHECK(out.cwiseAbs().maxCoeff() < 1e-15);
    }

    SUBCASE("trace preservation in differential form") {
        const MatrixXcd rho = random_density(layout.dim(), 21);
        const MatrixXcd out = djcm::lindblad_rhs(rho, random_hermitian(layout.dim(), 22), 0.4, layout);
        CHECK(std::abs(out.trace()) < 1e-12);
    }

    SUBCASE("coherent state photon loss rate") {
        const int M = 30;
        BasisLayout big(kRubidium, M);
        const double kappa = 0.2;
        VectorXcd atom = VectorXcd::Zero(8);
        atom(2) = 1.0;
        const VectorXcd coh = djcm::coherent_vector(complex<double>(1.0, 0.0), M);
        const VectorXcd psi = Eigen::kroneckerProduct(atom, coh);
        const MatrixXcd rho = psi * psi.adjoint();
        const MatrixXcd out =
            djcm::lindblad_rhs(rho, MatrixXcd::Zero(big.dim(), big.dim()), kappa, big);
        double dn_dt = 0.0, nbar = 0.0;
        for (int a = 0; a < 8; ++a)
            for (int n = 0; n < M; ++n) {
                dn_dt += n * out(big.index(a, n), big.index(a, n)).real();
                nbar += n * rho(big.index(a, n), big.index(a, n)).real();
            }
        CHECK(dn_dt == doctest::Approx(-2.0 * kappa * nbar).epsilon(1e-12));
    }

    CHECK_THROWS_AS(djcm::lindblad_rhs(MatrixXcd::Zero(3, 3), H, 0.1, layout), djcm::InvalidInput);
}

TEST_CASE("evolve: unitary purity and the specialized diagonal path") {
    const auto coeffs = djcm::build_coefficient_table(kRubidium.Jb, kRubidium.Jc);
    const int N = 16;
    BasisLayout layout(kRubidium, N);
    const MatrixXcd H = djcm::effective_hamiltonian(kRubidium, coeffs, 1.0, N);
    const MatrixXcd rho0 = djcm::initial_state(kRubidium, complex<double>(1.0, 0.0), N);

    SUBCASE("kappa = 0 preserves purity") {
        IntegratorConfig cfg;
        cfg.dt = 5e-3;
        cfg.t_end = 4.0;
        cfg.record_every = 200;
        djcm::evolve(rho0, H, 0.0, layout, cfg, [](double, const MatrixXcd& rho) {
            CHECK(rho.squaredNorm() == doctest::Approx(1.0).epsilon(1e-8));
        });
    }

    SUBCASE("one step of the diagonal fast path equals the generic right side") {
        IntegratorConfig cfg;
        cfg.dt = 1e-3;
        cfg.t_end = 1e-3;
        cfg.record_every = 1;
        const double kappa = 0.35;
        MatrixXcd after;
        djcm::evolve(rho0, H, kappa, layout, cfg,
                     [&](double t, const MatrixXcd& rho) { if (t > 0) after = rho; });

        const double dt = cfg.dt;
        const MatrixXcd k1 = djcm::lindblad_rhs(rho0, H, kappa, layout);
        const MatrixXcd k2 = djcm::lindblad_rhs(rho0 + 0.5 * dt * k1, H, kappa, layout);
        const MatrixXcd k3 = djcm::lindblad_rhs(rho0 + 0.5 * dt * k2, H, kappa, layout);
        const MatrixXcd k4 = djcm::lindblad_rhs(rho0 + dt * k3, H, kappa, layout);
        const MatrixXcd manual = rho0 + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        CHECK((after - manual).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("evolve: pure cavity damping keeps a coherent state coherent") {
    const int N = 25;
    BasisLayout layout(kRubidium, N);
    const double kappa = 0.05;
    const complex<double> alpha(1.0, 0.0);
    const MatrixXcd rho0 = djcm::initial_state(kRubidium, alpha, N);

    IntegratorConfig cfg;
    cfg.dt = 2e-3;
    cfg.t_end = 3.0;
    cfg.record_every = 500;
    const MatrixXcd H = MatrixXcd::Zero(layout.dim(), layout.dim());

    djcm::evolve(rho0, H, kappa, layout, cfg, [&](double t, const MatrixXcd& rho) {
        const complex<double> at = djcm::coherent_amplitude(alpha, kappa, t);
        const VectorXcd v = djcm::coherent_vector(at, N);
        const MatrixXcd field = djcm::partial_trace_atom(rho, layout);
        CHECK((field - v * v.adjoint()).cwiseAbs().maxCoeff() < 1e-8);
        // validates the alpha(t) = alpha e^{-kt} closed form against the oracle
        double nbar = 0.0;
        for (int n = 0; n < N; ++n) nbar += n * field(n, n).real();
        CHECK(nbar == doctest::Approx(std::norm(at)).epsilon(1e-8));
    });
}

TEST_CASE("evolve rejects bad configurations and states") {
    const auto coeffs = djcm::build_coefficient_table(kRubidium.Jb, kRubidium.Jc);
    const int N = 12;
    BasisLayout layout(kRubidium, N);
    const MatrixXcd H = djcm::effective_hamiltonian(kRubidium, coeffs, 1.0, N);
    const MatrixXcd rho0 = djcm::initial_state(kRubidium, complex<double>(0.5, 0.0), N);
    IntegratorConfig cfg;

    SUBCASE("stability guard") {
        cfg.dt = 10.0; // dt * spectral radius estimate >= 1
        CHECK_THROWS_AS(djcm::evolve(rho0, H, 0.5, layout, cfg), djcm::InvalidInput);
    }

    SUBCASE("initial state must satisfy the density invariants") {
        CHECK_THROWS_AS(djcm::evolve(2.0 * rho0, H, 0.1, layout, cfg), djcm::InvalidInput);
        CHECK_THROWS_AS(djcm::evolve(MatrixXcd::Zero(3, 3), H, 0.1, layout, cfg),
                        djcm::InvalidInput);
    }

    SUBCASE("bad step parameters") {
        cfg.dt = -1.0;
        CHECK_THROWS_AS(djcm::evolve(rho0, H, 0.1, layout, cfg), djcm::InvalidInput);
    }
}

TEST_CASE("density invariant checks") {
    const MatrixXcd rho = random_density(6, 5);
    const auto check = djcm::check_density(rho);
    CHECK(check.ok());
    CHECK(check.min_eigenvalue >= 0.0);

    MatrixXcd bad = rho;
    bad(0, 1) += complex<double>(0.0, 1e-6); // break Hermiticity
    CHECK_FALSE(djcm::check_density(bad).ok());

    MatrixXcd neg = MatrixXcd::Zero(3, 3);
    neg(0, 0) = 1.1;
    neg(1, 1) = -0.1;
    const auto c2 = djcm::check_density(neg);
    CHECK(c2.trace_error < 1e-12);
    CHECK(c2.min_eigenvalue == doctest::Approx(-0.1).epsilon(1e-12));
    CHECK_FALSE(c2.ok());
}

TEST_CASE("validate: truncation and convergence gates") {
    djcm::ModelParams params;
    params.levels = kRubidium;
    params.kappa = 0.01;
    params.convention = djcm::FrequencyConvention::SzDerived;

    SUBCASE("initial state that does not fit the cutoff is inconclusive") {
        params.alpha = 2.0; // |alpha|^2 = 4
        params.cutoff = 5;
        IntegratorConfig cfg;
        cfg.dt = 1e-2;
        cfg.t_end = 1.0;
        const auto report = djcm::validate(params, cfg);
        CHECK(report.status == djcm::ValidationReport::Status::Inconclusive);
        CHECK(report.note.find("cutoff") != std::string::npos);
    }

    SUBCASE("an unreachable dt tolerance is inconclusive, not a failure") {
        params.alpha = 1.0;
        params.cutoff = 20;
        IntegratorConfig cfg;
        cfg.dt = 0.05;
        cfg.t_end = 2.0;
        cfg.record_every = 10;
        cfg.tolerance = 1e-18;
        const auto report = djcm::validate(params, cfg);
        CHECK(report.status == djcm::ValidationReport::Status::Inconclusive);
        CHECK(report.dt_gate_delta > 1e-18);
    }
}
