#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cvar/estimator.hpp"

namespace cvar {

// Linear restrictions on one cointegration vector: beta*_j = H_j phi_j.
// An empty H means the column is unrestricted (H = I). normalize_row pins
// the post-convergence scale (beta_j[row] = normalize_value), with alpha_j
// rescaled inversely.
struct BetaRestriction {
    Eigen::MatrixXd h;  // (n + q_r) x s_j, full column rank
    int normalize_row = -1;
    double normalize_value = 1.0;
};

struct RestrictionSet {
    std::vector<BetaRestriction> beta;  // size r (or empty = all unrestricted)
    // n x r mask, true = free loading. Empty means all free.
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> alpha_free;

    // LR degrees of freedom: sum_j (p1 - s_j) - r(r-1) + #{zero alphas},
    // counting one scale normalization per vector.
    int degrees_of_freedom(int n, int p1, int r) const;
    void validate(int n, int p1, int r) const;  // throws InfeasibleRestrictions
};

struct RestrictedFit {
    CvarEstimate estimate;
    double lr = 0.0;
    int df = 0;
    double pvalue = 1.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> loglik_path;
    double loglik_unrestricted = 0.0;
};

// Restricted ML by a switching algorithm: alternating GLS updates of each
// phi_j given the others and of (alpha, Omega) given beta*, until the
// log-likelihood gain drops below tol. The likelihood is nondecreasing across
// iterations by construction.
RestrictedFit estimate_restricted(const TimeFrame& frame, const CvarSpec& spec,
                                  const RestrictionSet& restrictions, double tol = 1e-10,
                                  int max_iter = 1000);

}  // namespace cvar
