#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cvar/timeseries.hpp"

namespace cvar {

// Model specification for the vector error-correction system
//   dX_t = tau + d0 * steps + alpha (beta' X_{t-1} + delta' Dr_t)
//          + sum_i Gamma_i dX_{t-i} + gamma' d f_{t-lag} + eps_t
struct CvarSpec {
    int lag_order = 1;  // k >= 1; k - 1 lagged differences enter
    int rank = -1;      // cointegration rank; -1 means "search"
    DeterministicSpec deterministic;
    std::vector<std::string> exogenous;  // columns entering as differences
    int exog_lag = 1;                    // d f_{t - exog_lag}
    // Optional per-vector normalization: coefficient 1 on the named variable.
    std::vector<std::string> normalize_on;

    bool rank_fixed() const { return rank >= 0; }
};

// Concentrated regression residuals (Johansen 1996, ch. 6):
// r0 = residuals of dX_t, r1 = residuals of (X_{t-1}, Dr_t), both on the
// short-run regressor block {dX_{t-1..t-k+1}, Du_t, d exog}.
struct Concentrated {
    Eigen::MatrixXd r0;  // T_eff x n
    Eigen::MatrixXd r1;  // T_eff x (n + q_r)
    Eigen::MatrixXd z0;  // dX rows, T_eff x n
    Eigen::MatrixXd z1;  // levels + restricted det, T_eff x (n + q_r)
    Eigen::MatrixXd z2;  // short-run regressors, T_eff x q
    std::vector<int> years;  // equation years, length T_eff
    int t0 = 0;              // first equation row index within the sample
    int n = 0;
    std::vector<std::string> endo_names;
    std::vector<std::string> frame_det_names;  // user deterministic columns
};

Concentrated concentrate(const TimeFrame& frame, const CvarSpec& spec);

// Product-moment matrices S_ij = R_i' R_j / T_eff and the solved eigensystem.
struct RrrSolution {
    Eigen::VectorXd eigenvalues;  // descending, in [0, 1)
    Eigen::MatrixXd vectors;      // (n + q_r) x (n + q_r), V' S11 V = I
    Eigen::MatrixXd s00, s01, s11;
    int t_eff = 0;
};

RrrSolution rrr_solve(const Eigen::MatrixXd& r0, const Eigen::MatrixXd& r1);

struct CvarEstimate {
    CvarSpec spec;
    std::vector<std::string> endo_names;
    int n = 0;
    int r = 0;
    int k = 1;
    int t0 = 0;     // rows consumed as initial conditions
    int t_eff = 0;  // effective sample size
    int first_year = 0;             // first year of the estimation frame
    std::vector<int> years;         // equation years (length t_eff)

    Eigen::MatrixXd alpha;                // n x r
    Eigen::MatrixXd beta_star;            // (n + q_r) x r
    std::vector<Eigen::MatrixXd> gammas;  // k - 1 matrices, n x n
    Eigen::MatrixXd det_coef;             // n x q_u (const, then steps)
    Eigen::MatrixXd exog_coef;            // n x n_exog
    Eigen::MatrixXd frame_det_coef;       // n x |user deterministic columns|
    std::vector<std::string> frame_det_names;
    Eigen::MatrixXd omega;                // n x n, ML divisor
    Eigen::MatrixXd residuals;            // t_eff x n
    Eigen::VectorXd eigenvalues;          // first n, descending
    double loglik = 0.0;

    int q_restricted() const { return static_cast<int>(beta_star.rows()) - n; }
    // Stochastic rows of beta_star.
    Eigen::MatrixXd beta() const { return beta_star.topRows(n); }
    // Restricted-deterministic rows (q_r x r).
    Eigen::MatrixXd delta() const { return beta_star.bottomRows(q_restricted()); }
    // Equilibrium level mu(year): the relation reads beta' X = mu(year), so
    // mu = -delta' Dr(year). Zero when there are no restricted terms.
    Eigen::VectorXd mu_at(int year) const;
};

// Reduced-rank ML fit at the spec's (fixed) rank.
CvarEstimate fit(const TimeFrame& frame, const CvarSpec& spec);

// Rebuilds the short-run block, residuals, omega and loglik for a given
// (alpha, beta_star) pair on the concentrated data. Shared by fit() and the
// restricted estimator.
CvarEstimate assemble_estimate(const TimeFrame& frame, const CvarSpec& spec,
                               const Concentrated& conc, const Eigen::MatrixXd& alpha,
                               const Eigen::MatrixXd& beta_star,
                               const Eigen::VectorXd& eigenvalues);

// Gaussian log-likelihood implied by an ML residual covariance.
double gaussian_loglik(int t_eff, const Eigen::MatrixXd& omega);

}  // namespace cvar
