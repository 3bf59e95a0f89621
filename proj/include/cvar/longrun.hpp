#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "cvar/estimator.hpp"

namespace cvar {

// Granger-Johansen long-run machinery: X_t = C sum(eps) + stationary + A0,
// with C = beta_perp (alpha_perp' Gamma beta_perp)^-1 alpha_perp'.
struct LongRunRep {
    Eigen::MatrixXd c;            // n x n long-run impact matrix
    Eigen::MatrixXd alpha_perp;   // n x (n - r), orthonormal columns
    Eigen::MatrixXd beta_perp;    // n x (n - r), orthonormal columns
    Eigen::MatrixXd gamma_total;  // Gamma = I - sum Gamma_i
    Eigen::MatrixXd abar_term;    // alpha (beta' alpha)^-1
    std::optional<Eigen::MatrixXd> c_tstats;  // filled by bootstrap
};

LongRunRep compute_C(const CvarEstimate& est);

// Residual-bootstrap t-statistics for the entries of C: recursive resampling
// of fitted residual rows holding deterministic and exogenous paths fixed,
// refitting the same spec each replicate. t_ij = C_ij / bootstrap sd.
// Replicates that fail the I(1) condition are redrawn, up to 10*B attempts.
Eigen::MatrixXd bootstrap_c_tstats(const CvarEstimate& est, const TimeFrame& frame,
                                   int replications, std::uint64_t seed,
                                   unsigned threads = 0);

// Long-run conditional expectation lim E(X_tau | X_0) = C X_0 + abar_term * mu.
// The mu term is evaluated from the restricted deterministics at x0_year.
Eigen::VectorXd longrun_expectation(const LongRunRep& rep, const CvarEstimate& est,
                                    const Eigen::VectorXd& x0, int x0_year);

struct IndicatorOptions {
    std::string y = "y", c = "c", m = "m", h = "h";
    double concentration_change = 0.33;  // 200-year log change of m
    double gtc_stock = 800.0;            // atmospheric stock, GtC
    int bootstrap = 0;                   // 0 = no standard errors
    std::uint64_t seed = 42;
    unsigned threads = 0;
};

// Headline comparison indicators implied by (beta, C).
struct DerivedIndicators {
    double temperature_damage = 0.0;     // xi = -beta_h / beta_y in relation 1
    double temperature_damage_se = 0.0;
    double warming_due_to_co2 = 0.0;     // (dh/dm from relation 2) * dm
    double warming_due_to_co2_se = 0.0;
    double gdp_loss_per_gtc = 0.0;       // -C[y,m] * 100 / stock
    double gdp_loss_per_gtc_se = 0.0;
    double c_ym = 0.0;                   // direct long-run cell C[y,m]
    double c_ym_per_unit_m = 0.0;        // C[y,m] / C[m,m], cumulated-shock form
};

DerivedIndicators derived_indicators(const CvarEstimate& est, const LongRunRep& rep,
                                     const TimeFrame& frame,
                                     const IndicatorOptions& options);

}  // namespace cvar
