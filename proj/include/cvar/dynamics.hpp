#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "cvar/estimator.hpp"

namespace cvar {

// Law of motion of a fitted system, detached from the estimation sample so
// paths can be generated anywhere on the calendar. Exogenous differences and
// user deterministic columns are supplied per step by the caller (zero /
// last-value held when absent).
class VecmDynamics {
  public:
    static VecmDynamics from_estimate(const CvarEstimate& est);

    int n() const { return n_; }
    int k() const { return k_; }
    int r() const { return r_; }

    // Error-correction term beta' x + delta' Dr(year)  (equals beta'x - mu).
    Eigen::VectorXd disequilibrium(const Eigen::VectorXd& x, int year) const;

    // One step: level at `year` given the k most recent levels
    // window[0] = X_{year-1}, window[1] = X_{year-2}, ...
    // dexog is the exogenous difference term already lagged, empty if none.
    Eigen::VectorXd step(const std::vector<Eigen::VectorXd>& window, int year,
                         const Eigen::VectorXd& dexog, const Eigen::VectorXd& frame_det,
                         const Eigen::VectorXd& eps) const;

    // Companion matrix of the levels VAR; optional policy feedback
    // X^ctr = P X + p0 applied to the most recent state.
    Eigen::MatrixXd companion(const Eigen::MatrixXd* feedback = nullptr) const;

    int unit_root_count(double tol = 1e-8) const;

    // Simulates t_steps levels starting from init (size k, ordered oldest
    // first), years starting at start_year. shocks is t_steps x n.
    Eigen::MatrixXd simulate(const std::vector<Eigen::VectorXd>& init, int start_year,
                             const Eigen::MatrixXd& shocks,
                             const Eigen::MatrixXd* dexog = nullptr,
                             const Eigen::MatrixXd* frame_det = nullptr) const;

    const Eigen::MatrixXd& alpha() const { return alpha_; }
    const Eigen::MatrixXd& beta() const { return beta_; }
    const Eigen::MatrixXd& beta_star() const { return beta_star_; }
    const std::vector<Eigen::MatrixXd>& gammas() const { return gammas_; }
    const Eigen::MatrixXd& omega() const { return omega_; }
    const DeterministicSpec& deterministic() const { return det_; }
    int origin_year() const { return origin_year_; }

  private:
    int n_ = 0, k_ = 1, r_ = 0, origin_year_ = 0;
    Eigen::MatrixXd alpha_, beta_, beta_star_, delta_;
    std::vector<Eigen::MatrixXd> gammas_;
    Eigen::MatrixXd det_coef_, exog_coef_, frame_det_coef_, omega_;
    DeterministicSpec det_;
};

}  // namespace cvar
