#include "cvar/control.hpp"

#include <cmath>
#include <string>

#include "cvar/errors.hpp"
#include "cvar/linalg.hpp"

namespace cvar {

namespace {

double column_norm_product(const Eigen::MatrixXd& m) {
    double p = 1.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) p *= m.col(j).norm();
    return p;
}

}  // namespace

ControllabilityResult controllability_test(const LongRunRep& rep, const Eigen::MatrixXd& a,
                                           const Eigen::MatrixXd& b,
                                           const Eigen::MatrixXd* tstats,
                                           double critical_value, double tolerance) {
    const int n = static_cast<int>(rep.c.rows());
    if (a.rows() != n || b.rows() != n)
        throw Error(ErrorCode::InvalidArgument, "controllability: a, b must have n rows");
    if (a.cols() != b.cols())
        throw Error(ErrorCode::InvalidArgument,
                    "controllability: need as many targets as controls (m = s)");
    const int m = static_cast<int>(a.cols());
    if (m > 0 && (numerical_rank(a) < m || numerical_rank(b) < m))
        throw Error(ErrorCode::InvalidArgument, "controllability: a and b must have full "
                                                "column rank");

    ControllabilityResult out;
    const Eigen::MatrixXd bca = b.transpose() * rep.c * a;
    out.determinant = m == 0 ? 1.0 : bca.determinant();

    // det scales with column rescalings of a and b and with ||C||^m; divide
    // them out so the decision is scale invariant.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rep.c);
    const double c_norm = std::max(svd.singularValues()(0), 1e-300);
    const double denom =
        column_norm_product(a) * column_norm_product(b) * std::pow(c_norm, m);
    out.normalized_determinant = m == 0 ? 1.0 : out.determinant / denom;

    out.controllable = std::abs(out.normalized_determinant) > tolerance;
    out.weak = out.controllable && std::abs(out.normalized_determinant) < 1e-6;

    if (tstats) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (b.row(i).cwiseAbs().maxCoeff() == 0.0) continue;
                if (a.row(j).cwiseAbs().maxCoeff() == 0.0) continue;
                ControllabilityResult::Entry e;
                e.target_row = i;
                e.control_col = j;
                e.tstat = (*tstats)(i, j);
                e.rejects_zero = std::abs(e.tstat) > critical_value;
                out.entries.push_back(e);
                if (!e.rejects_zero) out.all_entries_reject = false;
            }
        }
        out.controllable = out.controllable && out.all_entries_reject;
    }
    return out;
}

Eigen::VectorXd ControlPolicy::mu_at(int year) const {
    if (delta.rows() == 0) return Eigen::VectorXd::Zero(beta.cols());
    return -delta.transpose() * restricted_deterministic_row(det, year, origin_year);
}

Eigen::VectorXd ControlPolicy::rule(const Eigen::VectorXd& x, int year) const {
    if (m() == 0) return Eigen::VectorXd::Zero(n());
    const Eigen::VectorXd policy_gap = b_star - b.transpose() * x;
    const Eigen::VectorXd system_gap = beta.transpose() * x - mu_at(year);
    return gain * (policy_gap + sys_load * system_gap);
}

ControlPolicy build_policy(const CvarEstimate& est, const LongRunRep& rep,
                           const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                           const Eigen::VectorXd& b_star, const PhaseIn& phase_in) {
    const ControllabilityResult check = controllability_test(rep, a, b);
    if (!check.controllable)
        throw Error(ErrorCode::NotControllable,
                    "not controllable: det(b'Ca)=" + std::to_string(check.determinant));
    const int m = static_cast<int>(a.cols());
    if (b_star.size() != m)
        throw Error(ErrorCode::InvalidArgument, "b_star must have one entry per target");

    ControlPolicy p;
    p.a = a;
    p.b = b;
    p.b_star = b_star;
    p.b_star_requested = b_star;
    p.phase_in = phase_in;
    p.alpha = est.alpha;
    p.beta = est.beta();
    p.delta = est.delta();
    p.det = est.spec.deterministic;
    p.origin_year = est.first_year;

    const Eigen::MatrixXd bca = b.transpose() * rep.c * a;
    const Eigen::MatrixXd bca_inv = bca.inverse();
    p.gain = a * bca_inv;
    p.sys_load = b.transpose() * rep.abar_term;  // b'alpha (beta'alpha)^-1
    p.abar = a * (a.transpose() * a).inverse();

    // nu(X) = gain [(b* - b'X) + sys_load (beta'X - mu)]
    //       = abar (kappa'X - kappa0) with
    // kappa' = (a'a)(b'Ca)^-1 [sys_load beta' - b'] and
    // kappa0 = (a'a)(b'Ca)^-1 [sys_load mu - b*].
    const Eigen::MatrixXd ata = a.transpose() * a;
    const Eigen::MatrixXd kappa_t =
        ata * bca_inv * (p.sys_load * p.beta.transpose() - b.transpose());
    p.kappa = kappa_t.transpose();
    p.kappa0 = ata * bca_inv * (p.sys_load * p.mu_at(phase_in.start_year) - b_star);

    // In the VAR(1) case the rule satisfies kappa'alpha = 0 and
    // I_m + kappa'abar = 0 exactly.
    if (est.k == 1 && m > 0) {
        const double scale =
            std::max(1.0, p.kappa.cwiseAbs().maxCoeff() * est.alpha.cwiseAbs().maxCoeff());
        const double id1 = (kappa_t * est.alpha).cwiseAbs().maxCoeff();
        const double id2 = (Eigen::MatrixXd::Identity(m, m) + kappa_t * p.abar)
                               .cwiseAbs()
                               .maxCoeff();
        if (id1 > 1e-8 * scale || id2 > 1e-8)
            throw Error(ErrorCode::InvalidArgument,
                        "policy identities kappa'alpha = 0, I + kappa'abar = 0 failed "
                        "(id1=" + std::to_string(id1) + ", id2=" + std::to_string(id2) + ")");
    }
    return p;
}

Eigen::VectorXd apply_control(const ControlPolicy& policy, const Eigen::VectorXd& x,
                              int year) {
    const double lambda = policy.phase_in.weight(year);
    if (lambda == 0.0) return x;
    return x + lambda * policy.rule(x, year);
}

AugmentedSystem augment_system(const CvarEstimate& est, const ControlPolicy& policy) {
    const int n = est.n;
    const int r = est.r;
    const int m = policy.m();
    const VecmDynamics dyn = VecmDynamics::from_estimate(est);
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd i_ab = eye + est.alpha * est.beta().transpose();

    AugmentedSystem out;
    out.loadings = Eigen::MatrixXd(n, r + m);
    out.loadings.leftCols(r) = est.alpha;
    out.loadings.rightCols(m) = i_ab * policy.abar;
    out.relations = Eigen::MatrixXd(r + m, n);
    out.relations.topRows(r) = est.beta().transpose();
    out.relations.bottomRows(m) = policy.kappa.transpose();
    out.intercepts = Eigen::VectorXd(r + m);
    out.intercepts.head(r) = policy.mu_at(policy.phase_in.start_year);
    out.intercepts.tail(m) = policy.kappa0;

    out.ma_coef = i_ab * policy.abar * policy.kappa.transpose();
    out.ma_spectral_radius = spectral_radius(out.ma_coef);

    // Fully phased-in feedback X^ctr = (I + abar kappa') X - abar kappa0.
    const Eigen::MatrixXd feedback = eye + policy.abar * policy.kappa.transpose();
    out.companion = dyn.companion(&feedback);
    out.unit_roots_before = dyn.unit_root_count();
    out.unit_roots_after = count_unit_eigenvalues(out.companion);

    const Eigen::VectorXd p0 = -policy.abar * policy.kappa0;
    Eigen::MatrixXd a1 = i_ab;
    if (!est.gammas.empty()) a1 += est.gammas[0];
    Eigen::VectorXd c0 = -est.alpha * policy.mu_at(policy.phase_in.start_year);
    if (est.det_coef.cols() > 0)
        c0 += est.det_coef * unrestricted_deterministic_row(est.spec.deterministic,
                                                            policy.phase_in.start_year);
    out.companion_constant = Eigen::VectorXd::Zero(n * est.k);
    out.companion_constant.head(n) = a1 * p0 + c0;

    if (out.unit_roots_after != n - r - m)
        throw Error(ErrorCode::PolicyDoesNotStabilize,
                    "controlled system keeps " + std::to_string(out.unit_roots_after) +
                        " unit roots, expected " + std::to_string(n - r - m));
    return out;
}

Eigen::VectorXd policy_assignment(const ControlPolicy& policy, const Eigen::VectorXd& eps) {
    return policy.abar * (policy.kappa.transpose() * eps);
}

Eigen::MatrixXd simulate_controlled(const VecmDynamics& dyn, const ControlPolicy& policy,
                                    const Eigen::VectorXd& x0, int start_year,
                                    const Eigen::MatrixXd& shocks, ControlledForm form,
                                    const Eigen::VectorXd* eps_prev) {
    // The three write-ups coincide exactly only in the pure VEC setting the
    // MA form is derived in: one lag, no unrestricted deterministics, at most
    // a restricted constant. Anything richer goes through the counterfactual
    // engine instead.
    if (dyn.k() != 1 || dyn.deterministic().n_unrestricted() > 0 ||
        !dyn.deterministic().restricted_trends.empty())
        throw Error(ErrorCode::InvalidArgument,
                    "controlled-form simulation needs a VAR(1) with at most a "
                    "restricted constant");
    const int n = dyn.n();
    const int m = policy.m();
    const auto t_steps = shocks.rows();
    const Eigen::MatrixXd i_ab =
        Eigen::MatrixXd::Identity(n, n) + dyn.alpha() * dyn.beta().transpose();
    const Eigen::VectorXd mu = policy.mu_at(start_year);
    const Eigen::MatrixXd theta = i_ab * policy.abar * policy.kappa.transpose();

    Eigen::MatrixXd path(t_steps, n);
    Eigen::VectorXd x = x0;
    Eigen::VectorXd last_eps = eps_prev ? *eps_prev : Eigen::VectorXd::Zero(n);

    for (Eigen::Index t = 0; t < t_steps; ++t) {
        const int year = start_year + static_cast<int>(t);
        const Eigen::VectorXd eps = shocks.row(t);
        switch (form) {
            case ControlledForm::RuleFeedback: {
                const Eigen::VectorXd xc = x + policy.rule(x, year);
                x = xc + dyn.alpha() * (dyn.beta().transpose() * xc - mu) + eps;
                break;
            }
            case ControlledForm::AugmentedVec: {
                Eigen::VectorXd gaps(dyn.r() + m);
                gaps.head(dyn.r()) = dyn.beta().transpose() * x - mu;
                gaps.tail(m) = policy.kappa.transpose() * x - policy.kappa0;
                Eigen::MatrixXd loadings(n, dyn.r() + m);
                loadings.leftCols(dyn.r()) = dyn.alpha();
                loadings.rightCols(m) = i_ab * policy.abar;
                x = x + loadings * gaps + eps;
                break;
            }
            case ControlledForm::Varma: {
                x = i_ab * x - dyn.alpha() * mu + eps + theta * last_eps;
                break;
            }
        }
        last_eps = eps;
        path.row(t) = x;
    }
    return path;
}

}  // namespace cvar
