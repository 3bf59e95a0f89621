#pragma once

#include <vector>

#include <Eigen/Dense>

namespace cvar {

// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

// Chi-square CDF and upper tail.
double chi2_cdf(double x, double df);
inline double chi2_pvalue(double x, double df) { return 1.0 - chi2_cdf(x, df); }

// Quantile with linear interpolation between order statistics
// (R type 7). p in [0, 1]; data need not be sorted.
double quantile(std::vector<double> data, double p);

// Sample mean / sd (ddof = 1).
double mean(const std::vector<double>& data);
double sample_sd(const std::vector<double>& data);

// Long-run standard error of the mean of an autocorrelated series via
// non-overlapping batch means.
double batch_means_se(const Eigen::VectorXd& series, int n_batches = 100);

}  // namespace cvar
