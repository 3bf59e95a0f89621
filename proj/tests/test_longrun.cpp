#include <doctest.h>

#include <cmath>

#include "cvar/dynamics.hpp"
#include "cvar/errors.hpp"
#include "cvar/linalg.hpp"
#include "cvar/longrun.hpp"
#include "cvar/rng.hpp"
#include "helpers.hpp"

using namespace cvar;

namespace {

// Random VAR(1) model with a verified I(1) structure: exactly n - r unit
// roots and everything else clearly stable.
CvarEstimate random_i1_estimate(int n, int r, Rng& rng) {
    for (;;) {
        CvarEstimate est = testutil::f1_estimate();
        est.n = n;
        est.r = r;
        est.endo_names.clear();
        for (int j = 0; j < n; ++j) est.endo_names.push_back("v" + std::to_string(j));
        est.alpha = 0.4 * rng.normal_matrix(n, r);
        est.beta_star = rng.normal_matrix(n, r);
        est.spec.deterministic = DeterministicSpec{};
        est.omega = Eigen::MatrixXd::Identity(n, n);
        est.det_coef = Eigen::MatrixXd(n, 0);
        est.exog_coef = Eigen::MatrixXd(n, 0);
        est.frame_det_coef = Eigen::MatrixXd(n, 0);
        est.residuals = Eigen::MatrixXd::Zero(est.t_eff, n);
        est.eigenvalues = Eigen::VectorXd::Zero(n);

        const VecmDynamics dyn = VecmDynamics::from_estimate(est);
        Eigen::EigenSolver<Eigen::MatrixXd> es(dyn.companion(), false);
        int units = 0;
        bool bad = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double m = std::abs(es.eigenvalues()(i));
            if (m >= 1.0 - 1e-9 && m <= 1.0 + 1e-9)
                ++units;
            else if (m > 0.95)
                bad = true;
        }
        if (!bad && units == n - r) return est;
    }
}

}  // namespace

TEST_CASE("F1 long-run impact matrix is exact") {
    const CvarEstimate est = testutil::f1_estimate();
    const LongRunRep rep = compute_C(est);
    Eigen::MatrixXd want(2, 2);
    want << 0.0, 1.0, 0.0, 1.0;
    CHECK((rep.c - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("no cointegration gives C = I for one lag") {
    CvarEstimate est = testutil::f1_estimate();
    est.r = 0;
    est.alpha = Eigen::MatrixXd(2, 0);
    est.beta_star = Eigen::MatrixXd(2, 0);
    const LongRunRep rep = compute_C(est);
    CHECK((rep.c - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("full rank yields a zero long-run impact") {
    CvarEstimate est = testutil::f1_estimate();
    est.r = 2;
    est.alpha = Eigen::MatrixXd(2, 2);
    est.alpha << -0.5, 0.1, 0.0, -0.4;
    est.beta_star = Eigen::MatrixXd::Identity(2, 2);
    const LongRunRep rep = compute_C(est);
    CHECK(rep.c.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("beta'C = 0, C alpha = 0 and C Gamma C = C on random I(1) models") {
    Rng rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_index(3));
        const int r = 1 + static_cast<int>(rng.uniform_index(n - 1));
        const CvarEstimate est = random_i1_estimate(n, r, rng);
        const LongRunRep rep = compute_C(est);
        CHECK((est.beta().transpose() * rep.c).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((rep.c * est.alpha).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((rep.c * rep.gamma_total * rep.c - rep.c).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(numerical_rank(rep.c) == n - r);
    }
}

TEST_CASE("C is invariant to rescaling the cointegration pair") {
    CvarEstimate est = testutil::f1_estimate();
    const LongRunRep a = compute_C(est);
    est.beta_star *= 2.0;
    est.alpha /= 2.0;
    const LongRunRep b = compute_C(est);
    CHECK((a.c - b.c).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("singular I(1) condition is reported") {
    CvarEstimate est = testutil::f1_estimate();
    // alpha_perp = (0,1)', beta_perp = (1,1)'. With Gamma_1 = [[0,0],[2,-1]],
    // Gamma = I - Gamma_1 = [[1,0],[-2,2]] and alpha_perp' Gamma beta_perp = 0.
    est.k = 2;
    est.spec.lag_order = 2;
    Eigen::MatrixXd g1(2, 2);
    g1 << 0.0, 0.0, 2.0, -1.0;
    est.gammas = {g1};
    try {
        (void)compute_C(est);
        FAIL("expected I1ConditionFailed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::I1ConditionFailed);
    }
}

TEST_CASE("long-run expectation matches the closed form and a long simulation") {
    const CvarEstimate est = testutil::f1_estimate();
    const LongRunRep rep = compute_C(est);
    Eigen::Vector2d x0(3.0, 5.0);
    const Eigen::VectorXd xinf = longrun_expectation(rep, est, x0, 1950);
    CHECK(xinf(0) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(xinf(1) == doctest::Approx(5.0).epsilon(1e-12));

    // Zero-shock forward simulation as an independent oracle.
    const VecmDynamics dyn = VecmDynamics::from_estimate(est);
    const Eigen::MatrixXd path = dyn.simulate({x0}, 1950, Eigen::MatrixXd::Zero(500, 2));
    CHECK((path.row(499).transpose() - xinf).cwiseAbs().maxCoeff() < 1e-6);

    // Linearity at the origin.
    const Eigen::VectorXd zero = longrun_expectation(rep, est, Eigen::Vector2d(0, 0), 1950);
    CHECK(zero.cwiseAbs().maxCoeff() == 0.0);

    // On the attractor the limit satisfies beta'x_inf = mu.
    const CvarEstimate est_mu = testutil::f1_estimate(2.0);
    const LongRunRep rep_mu = compute_C(est_mu);
    Eigen::Vector2d on_attractor(3.0, 1.0);  // beta'x = 2 = mu
    const Eigen::VectorXd xinf_mu =
        longrun_expectation(rep_mu, est_mu, on_attractor, 1950);
    CHECK(xinf_mu(0) - xinf_mu(1) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("bootstrap t-statistics separate signal from zero entries") {
    const TimeFrame tf = testutil::f1_frame(1000, 31);
    CvarSpec spec;
    spec.lag_order = 1;
    spec.rank = 1;
    const CvarEstimate est = fit(tf, spec);

    const Eigen::MatrixXd t1 = bootstrap_c_tstats(est, tf, 199, 99);
    // True C = [[0,1],[0,1]]: the second column carries a unit impact.
    CHECK(std::abs(t1(0, 1)) > 3.0);
    CHECK(std::abs(t1(1, 1)) > 3.0);

    // Deterministic under the seed, different across seeds.
    const Eigen::MatrixXd t2 = bootstrap_c_tstats(est, tf, 199, 99);
    CHECK((t1 - t2).cwiseAbs().maxCoeff() == 0.0);
    const Eigen::MatrixXd t3 = bootstrap_c_tstats(est, tf, 199, 100);
    CHECK((t1 - t3).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("zero-impact entries rarely reject") {
    // C[0,0] = 0 in the F1 model; |t| should stay below 2 in most samples.
    int small = 0;
    const int metas = 10;
    for (int i = 0; i < metas; ++i) {
        const TimeFrame tf = testutil::f1_frame(300, 400 + i);
        CvarSpec spec;
        spec.lag_order = 1;
        spec.rank = 1;
        const CvarEstimate est = fit(tf, spec);
        const Eigen::MatrixXd t = bootstrap_c_tstats(est, tf, 199, 7 + i);
        if (std::abs(t(0, 0)) < 2.0) ++small;
    }
    CHECK(small >= 8);
}

TEST_CASE("derived indicators follow their defining products") {
    // Relations: (1) y - 0.5 c - 1.5 h stationary, (2) h - 2 m stationary.
    CvarEstimate est = testutil::f1_estimate();
    est.n = 4;
    est.r = 2;
    est.endo_names = {"y", "c", "m", "h"};
    est.alpha = Eigen::MatrixXd(4, 2);
    est.alpha << -0.3, 0.0, 0.1, 0.0, 0.0, 0.05, 0.0, -0.4;
    est.beta_star = Eigen::MatrixXd(4, 2);
    est.beta_star << 1.0, 0.0,
                    -0.5, 0.0,
                     0.0, -2.0,
                    -1.5, 1.0;
    est.omega = Eigen::MatrixXd::Identity(4, 4);
    est.det_coef = Eigen::MatrixXd(4, 0);
    est.exog_coef = Eigen::MatrixXd(4, 0);
    est.frame_det_coef = Eigen::MatrixXd(4, 0);
    est.residuals = Eigen::MatrixXd::Zero(est.t_eff, 4);
    est.eigenvalues = Eigen::VectorXd::Zero(4);

    const LongRunRep rep = compute_C(est);
    IndicatorOptions opt;
    opt.concentration_change = 0.5;
    const TimeFrame dummy = testutil::f1_frame(50, 1);  // unused without bootstrap
    const DerivedIndicators ind = derived_indicators(est, rep, dummy, opt);
    CHECK(ind.temperature_damage == doctest::Approx(1.5).epsilon(1e-12));
    // dh/dm = 2 exactly, dm = 0.5 -> dT = 1.0.
    CHECK(ind.warming_due_to_co2 == doctest::Approx(1.0).epsilon(1e-12));
    // gamma = -C[y,m] * 100 / 800 under the default stock.
    CHECK(ind.gdp_loss_per_gtc ==
          doctest::Approx(-rep.c(0, 2) * 100.0 / 800.0).epsilon(1e-12));
    CHECK(ind.c_ym == doctest::Approx(rep.c(0, 2)).epsilon(1e-14));
}

TEST_CASE("indicator name map failures are explicit") {
    const CvarEstimate est = testutil::f1_estimate();
    const LongRunRep rep = compute_C(est);
    const TimeFrame dummy = testutil::f1_frame(50, 2);
    try {
        (void)derived_indicators(est, rep, dummy, IndicatorOptions{});
        FAIL("expected NameMapIncomplete");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NameMapIncomplete);
    }
}
