#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cvar/estimator.hpp"
#include "cvar/rng.hpp"
#include "cvar/timeseries.hpp"

namespace testutil {

inline cvar::TimeFrame frame_from(int first_year, const Eigen::MatrixXd& values,
                                  std::vector<std::string> names,
                                  std::vector<cvar::Role> roles) {
    std::vector<int> years(values.rows());
    for (Eigen::Index i = 0; i < values.rows(); ++i)
        years[static_cast<std::size_t>(i)] = first_year + static_cast<int>(i);
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> missing =
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(values.rows(),
                                                                      values.cols(), false);
    return cvar::TimeFrame(years, values, std::move(names), std::move(roles), missing);
}

// The VAR(1) workhorse fixture: n = 2, alpha = (-0.5, 0)', beta = (1, -1)',
// equilibrium beta'x = mu, so C = [[0, 1], [0, 1]].
inline cvar::CvarEstimate f1_estimate(double mu = 0.0, int t_eff = 100,
                                      int first_year = 1900) {
    cvar::CvarEstimate est;
    est.spec.lag_order = 1;
    est.spec.rank = 1;
    est.spec.deterministic.restricted_constant = mu != 0.0;
    est.endo_names = {"x1", "x2"};
    est.n = 2;
    est.r = 1;
    est.k = 1;
    est.t0 = 1;
    est.t_eff = t_eff;
    est.first_year = first_year;
    est.years.resize(t_eff);
    for (int i = 0; i < t_eff; ++i) est.years[i] = first_year + 1 + i;
    est.alpha = Eigen::MatrixXd(2, 1);
    est.alpha << -0.5, 0.0;
    if (mu != 0.0) {
        est.beta_star = Eigen::MatrixXd(3, 1);
        est.beta_star << 1.0, -1.0, -mu;  // beta*'[x;1] = beta'x - mu
    } else {
        est.beta_star = Eigen::MatrixXd(2, 1);
        est.beta_star << 1.0, -1.0;
    }
    est.det_coef = Eigen::MatrixXd(2, 0);
    est.exog_coef = Eigen::MatrixXd(2, 0);
    est.frame_det_coef = Eigen::MatrixXd(2, 0);
    est.omega = Eigen::MatrixXd::Identity(2, 2);
    est.residuals = Eigen::MatrixXd::Zero(t_eff, 2);
    est.eigenvalues = Eigen::VectorXd::Zero(2);
    est.eigenvalues(0) = 0.5;
    est.loglik = 0.0;
    return est;
}

// Simulates the F1 law of motion; rows are levels from t = 1..T given x0.
inline Eigen::MatrixXd simulate_f1(const Eigen::Vector2d& x0, double mu, int t_steps,
                                   cvar::Rng& rng, double shock_scale = 1.0) {
    Eigen::MatrixXd path(t_steps, 2);
    Eigen::Vector2d x = x0;
    for (int t = 0; t < t_steps; ++t) {
        const double ec = x(0) - x(1) - mu;
        x(0) += -0.5 * ec + shock_scale * rng.normal();
        x(1) += shock_scale * rng.normal();
        path.row(t) = x;
    }
    return path;
}

// F1 data wrapped in a frame (x0 on the attractor).
inline cvar::TimeFrame f1_frame(int t_obs, std::uint64_t seed, double mu = 0.0,
                                int first_year = 1900) {
    cvar::Rng rng(seed);
    Eigen::MatrixXd values(t_obs, 2);
    values.row(0) = Eigen::Vector2d(mu, 0.0);
    values.bottomRows(t_obs - 1) =
        simulate_f1(values.row(0), mu, t_obs - 1, rng);
    return frame_from(first_year, values, {"x1", "x2"},
                      {cvar::Role::Endogenous, cvar::Role::Endogenous});
}

// Independent two-step OLS oracle used against concentrate(): residuals of y
// on z by plain normal equations.
inline Eigen::MatrixXd ols_oracle_residuals(const Eigen::MatrixXd& y,
                                            const Eigen::MatrixXd& z) {
    if (z.cols() == 0) return y;
    const Eigen::MatrixXd coef = (z.transpose() * z).ldlt().solve(z.transpose() * y);
    return y - z * coef;
}

}  // namespace testutil
