#include <doctest.h>

#include <cmath>

#include "cvar/control.hpp"
#include "cvar/errors.hpp"
#include "cvar/longrun.hpp"
#include "cvar/rng.hpp"
#include "cvar/stats.hpp"
#include "helpers.hpp"

using namespace cvar;

namespace {

Eigen::MatrixXd unit(int n, int j) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, 1);
    e(j, 0) = 1.0;
    return e;
}

ControlPolicy f1_policy(const CvarEstimate& est, double b_star_value,
                        int start_year = 2000, int ramp = 1) {
    const LongRunRep rep = compute_C(est);
    Eigen::VectorXd b_star(1);
    b_star << b_star_value;
    PhaseIn phase{start_year, ramp};
    return build_policy(est, rep, unit(2, 1), unit(2, 0), b_star, phase);
}

}  // namespace

TEST_CASE("controllability decision follows det(b'Ca)") {
    const CvarEstimate est = testutil::f1_estimate();
    const LongRunRep rep = compute_C(est);

    const auto yes = controllability_test(rep, unit(2, 1), unit(2, 0));
    CHECK(yes.determinant == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(yes.controllable);

    const auto no = controllability_test(rep, unit(2, 0), unit(2, 0));
    CHECK(no.determinant == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(no.controllable);
}

TEST_CASE("controllability decision survives a million-fold rescaling") {
    const CvarEstimate est = testutil::f1_estimate();
    const LongRunRep rep = compute_C(est);
    for (const double scale : {1e-6, 1e6}) {
        const auto yes = controllability_test(rep, scale * unit(2, 1), unit(2, 0));
        CHECK(yes.controllable);
        const auto no = controllability_test(rep, scale * unit(2, 0), unit(2, 0));
        CHECK_FALSE(no.controllable);
    }
}

TEST_CASE("controllability honors supplied t-statistics") {
    const CvarEstimate est = testutil::f1_estimate();
    const LongRunRep rep = compute_C(est);
    Eigen::MatrixXd tstats(2, 2);
    tstats << 0.5, 3.7, 0.2, 3.8;
    const auto res =
        controllability_test(rep, unit(2, 1), unit(2, 0), &tstats);
    CHECK(res.controllable);  // relevant entry t = 3.7 rejects zero
    tstats(0, 1) = 1.0;
    const auto res2 =
        controllability_test(rep, unit(2, 1), unit(2, 0), &tstats);
    CHECK_FALSE(res2.controllable);
    CHECK_FALSE(res2.all_entries_reject);
}

TEST_CASE("dimension mismatches are rejected") {
    const CvarEstimate est = testutil::f1_estimate();
    const LongRunRep rep = compute_C(est);
    Eigen::MatrixXd a(2, 2);
    a.setIdentity();
    CHECK_THROWS_AS((void)controllability_test(rep, a, unit(2, 0)), Error);
}

TEST_CASE("the F1 control rule matches the hand-derived form") {
    const CvarEstimate est = testutil::f1_estimate();
    // b* = 0, mu = 0: nu(X) = (0, -x2)'.
    const ControlPolicy p0 = f1_policy(est, 0.0);
    CHECK(p0.kappa(0, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p0.kappa(1, 0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(p0.kappa0(0) == doctest::Approx(0.0).epsilon(1e-12));
    const Eigen::VectorXd nu = p0.rule(Eigen::Vector2d(7.0, 3.0), 2005);
    CHECK(nu(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(nu(1) == doctest::Approx(-3.0).epsilon(1e-12));

    // b* = 1: nu(X) = (0, 1 - x2)'.
    const ControlPolicy p1 = f1_policy(est, 1.0);
    const Eigen::VectorXd nu1 = p1.rule(Eigen::Vector2d(7.0, 3.0), 2005);
    CHECK(nu1(1) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(p1.kappa0(0) == doctest::Approx(-1.0).epsilon(1e-12));

    // At the objective and the equilibrium the rule is silent.
    const Eigen::VectorXd quiet = p1.rule(Eigen::Vector2d(1.0, 1.0), 2005);
    CHECK(quiet.cwiseAbs().maxCoeff() < 1e-12);

    // VAR(1) policy identities.
    CHECK((p1.kappa.transpose() * est.alpha).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((Eigen::MatrixXd::Identity(1, 1) + p1.kappa.transpose() * p1.abar)
              .cwiseAbs()
              .maxCoeff() < 1e-10);
}

TEST_CASE("build_policy rejects uncontrollable pairs") {
    const CvarEstimate est = testutil::f1_estimate();
    const LongRunRep rep = compute_C(est);
    Eigen::VectorXd b_star(1);
    b_star << 0.0;
    try {
        (void)build_policy(est, rep, unit(2, 0), unit(2, 0), b_star, PhaseIn{2000, 1});
        FAIL("expected NotControllable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotControllable);
        CHECK(std::string(e.what()).find("not controllable") != std::string::npos);
    }
}

TEST_CASE("apply_control ramps linearly") {
    const CvarEstimate est = testutil::f1_estimate();
    ControlPolicy p = f1_policy(est, 1.0, 2000, 1);

    // Before the start year nothing happens.
    const Eigen::VectorXd before = apply_control(p, Eigen::Vector2d(5.0, 3.0), 1999);
    CHECK(before(1) == 3.0);

    // Full strength: the control jumps to the objective-consistent value.
    const Eigen::VectorXd full = apply_control(p, Eigen::Vector2d(5.0, 3.0), 2000);
    CHECK(full(1) == doctest::Approx(1.0).epsilon(1e-12));

    // Half strength on the first year of a two-year ramp.
    p.phase_in.ramp_years = 2;
    const Eigen::VectorXd half = apply_control(p, Eigen::Vector2d(5.0, 3.0), 2000);
    CHECK(half(1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("augmented system drops the controlled unit root") {
    const CvarEstimate est = testutil::f1_estimate();
    const ControlPolicy p = f1_policy(est, 0.7);
    const AugmentedSystem aug = augment_system(est, p);

    CHECK(aug.unit_roots_before == 1);
    CHECK(aug.unit_roots_after == 0);

    // Controlled companion eigenvalues {0.5, 0}.
    Eigen::EigenSolver<Eigen::MatrixXd> es(aug.companion, false);
    std::vector<double> mags;
    for (int i = 0; i < 2; ++i) mags.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(mags.begin(), mags.end());
    CHECK(mags[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mags[1] == doctest::Approx(0.5).epsilon(1e-12));

    // MA block against an entry-wise symbolic evaluation:
    // (I + alpha beta') = [[0.5, 0.5], [0, 1]], abar kappa' = [[0,0],[0,-1]],
    // product = [[0, -0.5], [0, -1]].
    Eigen::MatrixXd want(2, 2);
    want << 0.0, 0.5 * 0.0 + 0.5 * (-1.0), 0.0, 0.0 * 0.0 + 1.0 * (-1.0);
    CHECK((aug.ma_coef - want).cwiseAbs().maxCoeff() < 1e-12);
    // The nonzero MA eigenvalue sits exactly at -1 for any VAR(1) policy
    // (Theta^2 = -Theta), so the spectral radius is 1, not < 1.
    CHECK(aug.ma_spectral_radius == doctest::Approx(1.0).epsilon(1e-10));

    // Stacked loadings and relations of the augmented VEC.
    CHECK(aug.loadings.cols() == 2);
    CHECK((aug.loadings.col(0) - est.alpha.col(0)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(aug.relations.rows() == 2);
}

TEST_CASE("empty control leaves the system untouched") {
    const CvarEstimate est = testutil::f1_estimate();
    const LongRunRep rep = compute_C(est);
    ControlPolicy p;
    p.a = Eigen::MatrixXd(2, 0);
    p.b = Eigen::MatrixXd(2, 0);
    p.b_star = Eigen::VectorXd(0);
    p.abar = Eigen::MatrixXd(2, 0);
    p.kappa = Eigen::MatrixXd(2, 0);
    p.kappa0 = Eigen::VectorXd(0);
    p.gain = Eigen::MatrixXd(2, 0);
    p.sys_load = Eigen::MatrixXd(0, 1);
    p.beta = est.beta();
    p.alpha = est.alpha;
    p.delta = est.delta();
    p.det = est.spec.deterministic;
    p.origin_year = est.first_year;
    p.phase_in = PhaseIn{2000, 1};
    (void)rep;

    const AugmentedSystem aug = augment_system(est, p);
    CHECK(aug.unit_roots_after == 1);  // n - r - 0
    const VecmDynamics dyn = VecmDynamics::from_estimate(est);
    CHECK((aug.companion - dyn.companion()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("a broken rule is caught by the unit-root assertion") {
    const CvarEstimate est = testutil::f1_estimate();
    ControlPolicy p = f1_policy(est, 0.0);
    p.kappa.setZero();  // sabotage: feedback does nothing
    try {
        (void)augment_system(est, p);
        FAIL("expected PolicyDoesNotStabilize");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PolicyDoesNotStabilize);
    }
}

TEST_CASE("policy assignment is abar kappa' eps") {
    const CvarEstimate est = testutil::f1_estimate();
    const ControlPolicy p = f1_policy(est, 0.0);
    CHECK(policy_assignment(p, Eigen::Vector2d(0.0, 0.0)).cwiseAbs().maxCoeff() == 0.0);
    const Eigen::VectorXd w = policy_assignment(p, Eigen::Vector2d(0.0, 1.0));
    CHECK(w(0) == doctest::Approx(0.0));
    CHECK(w(1) == doctest::Approx(-1.0));
    CHECK(policy_assignment(p, Eigen::Vector2d(1.0, 0.0)).cwiseAbs().maxCoeff() <
          1e-14);
}

TEST_CASE("the three controlled representations coincide") {
    // F1 and a second, denser VAR(1) fixture.
    for (int fixture = 0; fixture < 2; ++fixture) {
        CvarEstimate est;
        Eigen::MatrixXd a_sel, b_sel;
        if (fixture == 0) {
            est = testutil::f1_estimate(0.5);
            a_sel = unit(2, 1);
            b_sel = unit(2, 0);
        } else {
            est = testutil::f1_estimate();
            est.n = 3;
            est.endo_names = {"x1", "x2", "x3"};
            est.alpha = Eigen::MatrixXd(3, 1);
            est.alpha << -0.4, 0.1, 0.05;
            est.beta_star = Eigen::MatrixXd(3, 1);
            est.beta_star << 1.0, -0.7, -0.3;
            est.omega = Eigen::MatrixXd::Identity(3, 3);
            est.det_coef = Eigen::MatrixXd(3, 0);
            est.exog_coef = Eigen::MatrixXd(3, 0);
            est.frame_det_coef = Eigen::MatrixXd(3, 0);
            est.residuals = Eigen::MatrixXd::Zero(100, 3);
            est.eigenvalues = Eigen::VectorXd::Zero(3);
            a_sel = unit(3, 2);
            b_sel = unit(3, 0);
        }
        const LongRunRep rep = compute_C(est);
        Eigen::VectorXd b_star(1);
        b_star << 0.8;
        const ControlPolicy policy =
            build_policy(est, rep, a_sel, b_sel, b_star, PhaseIn{2000, 1});
        const VecmDynamics dyn = VecmDynamics::from_estimate(est);

        Rng rng(17 + fixture);
        const int t_steps = 1000;
        const Eigen::MatrixXd shocks = rng.normal_matrix(t_steps, est.n);
        Eigen::VectorXd x0 = rng.normal_vector(est.n);

        const Eigen::MatrixXd rule_path = simulate_controlled(
            dyn, policy, x0, 2001, shocks, ControlledForm::RuleFeedback);
        const Eigen::MatrixXd vec_path = simulate_controlled(
            dyn, policy, x0, 2001, shocks, ControlledForm::AugmentedVec);
        CHECK((rule_path - vec_path).cwiseAbs().maxCoeff() < 1e-10);

        // The MA form joins one step later: X_1 pins the lagged shock.
        const Eigen::VectorXd x1 = rule_path.row(0);
        const Eigen::VectorXd eps1 = shocks.row(0);
        const Eigen::MatrixXd varma_path =
            simulate_controlled(dyn, policy, x1, 2002, shocks.bottomRows(t_steps - 1),
                                ControlledForm::Varma, &eps1);
        CHECK((varma_path - rule_path.bottomRows(t_steps - 1)).cwiseAbs().maxCoeff() <
              1e-10);

        // Assignment identity W_{t+1} = abar kappa' eps_t along the path.
        for (int t = 5; t < 10; ++t) {
            const Eigen::VectorXd w =
                policy.abar * (policy.kappa.transpose() * rule_path.row(t).transpose() -
                               policy.kappa0);
            const Eigen::VectorXd w_eps =
                policy_assignment(policy, shocks.row(t).transpose());
            CHECK((w - w_eps).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("controlled target is stationary around the objective") {
    const CvarEstimate est = testutil::f1_estimate();
    const ControlPolicy policy = f1_policy(est, 1.0);
    const VecmDynamics dyn = VecmDynamics::from_estimate(est);

    Rng rng(23);
    const int t_steps = 10000;
    const Eigen::MatrixXd shocks = rng.normal_matrix(t_steps, 2);
    const Eigen::MatrixXd path = simulate_controlled(
        dyn, policy, Eigen::Vector2d(0.0, 0.0), 2001, shocks, ControlledForm::RuleFeedback);
    const Eigen::VectorXd target = path.col(0);  // b'X = x1
    const double se = batch_means_se(target.tail(8000), 80);
    CHECK(std::abs(target.tail(8000).mean() - 1.0) < 4.0 * se);
}
