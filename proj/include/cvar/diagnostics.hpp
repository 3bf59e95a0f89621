#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cvar/estimator.hpp"

namespace cvar {

// Fluctuation test for constancy of the cointegrating parameters
// (Nyblom 1989; Hansen & Johansen 1999, in the Bruggemann-Donati-Warne
// moment form):
//   L_T(t) = (t/T)^2 tr{ V^-1 S(t)' M^-1 S(t) },
//   S(t)   = N'(S01(t) - alpha beta*' S11(t))' Omega^-1 alpha,
//   V      = alpha' Omega^-1 alpha,   M = T^-1 N' S11(T) N,
// with cumulative moments S.j(t) = t^-1 sum_{i<=t} R.i R.j' of the
// full-sample concentrated residuals; no recursive estimation is involved.
struct NyblomOptions {
    double t_min_fraction = 0.1;
    // Reference for the 95% level: supplied externally or bootstrapped
    // (parametric, Gaussian) under the fitted model.
    std::optional<double> reference;
    int bootstrap = 399;
    std::uint64_t seed = 7021;
    unsigned threads = 0;
};

struct NyblomResult {
    std::vector<int> years;   // equation years covered by the path
    Eigen::VectorXd path;     // L_T(t) for t = t_min..T
    int t_min = 0;
    double sup_stat = 0.0;
    double reference95 = 0.0;
    bool exceeds = false;
    bool reference_bootstrapped = false;
};

NyblomResult nyblom_sequence(const TimeFrame& frame, const CvarSpec& spec,
                             const CvarEstimate& est, const NyblomOptions& options = {});

struct ResidualDiagnostics {
    std::vector<std::string> names;
    int max_lag = 0;
    Eigen::MatrixXd acf;      // max_lag x n
    double acf_bound = 0.0;   // +-2/sqrt(T)
    double portmanteau = 0.0;
    int portmanteau_df = 0;
    double portmanteau_pvalue = 1.0;
    Eigen::VectorXd sd_first_half;
    Eigen::VectorXd sd_second_half;
};

// Per-equation autocorrelations, a multivariate portmanteau statistic and a
// split-sample volatility indicator.
ResidualDiagnostics residual_diagnostics(const CvarEstimate& est, int max_lag);

}  // namespace cvar
