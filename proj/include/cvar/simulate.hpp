#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cvar/control.hpp"
#include "cvar/dynamics.hpp"
#include "cvar/estimator.hpp"

namespace cvar {

struct SimulationPath {
    std::vector<int> years;
    std::vector<std::string> names;  // endogenous column names
    Eigen::MatrixXd levels;      // T x n endogenous levels
    Eigen::MatrixXd injections;  // T x m, applied a'(X^ctr - X), zero before start
    std::string label;
};

struct BootstrapBands {
    std::vector<int> years;
    Eigen::MatrixXd mean;   // T x n
    Eigen::MatrixXd lower;  // T x n
    Eigen::MatrixXd upper;  // T x n
    double lower_q = 0.05;
    double upper_q = 0.95;
    int replications = 0;
    std::uint64_t seed = 0;
};

struct CostReport {
    int reference_year = 0;
    std::vector<std::string> variables;
    std::vector<double> percent_change;   // log vars: 100(exp(cf-obs)-1)
    std::vector<double> level_change;     // non-log vars: cf - obs
    std::vector<bool> is_log;
    // Latest observed year whose value matches the counterfactual reference
    // value (linear interpolation between adjacent years); NaN if never.
    std::vector<double> equivalent_year;
};

// Replays history under a policy: the observed path is reproduced up to the
// policy start, then the fitted residual sequence drives the controlled
// system. A null policy (nullptr) reproduces the observed data exactly.
SimulationPath replay_counterfactual(const CvarEstimate& est, const ControlPolicy* policy,
                                     const TimeFrame& frame,
                                     const std::string& label = "counterfactual");

struct BandOptions {
    int replications = 500;
    std::uint64_t seed = 42;
    // Residual rows are resampled from this year window (defaults to the full
    // residual sample when zero).
    int residual_from = 0;
    int residual_to = 0;
    double lower_q = 0.05;
    double upper_q = 0.95;
    unsigned threads = 0;
    bool warned_short_window = false;  // set on return when window < 30 rows
    // Test hook: every replicate reuses the same child stream, so any B >= 2
    // produces zero dispersion (lower = mean = upper).
    bool degenerate_identical_replicates = false;
};

// Bootstrap bands around the controlled replay: each replicate redraws the
// shock sequence iid (with replacement) from the residual window.
BootstrapBands bootstrap_bands(const CvarEstimate& est, const ControlPolicy* policy,
                               const TimeFrame& frame, BandOptions& options);

struct ForecastResult {
    SimulationPath point;  // zero-shock path
    BootstrapBands bands;
};

// Out-of-sample continuation: deterministic terms extend per their
// definitions (the broken trend keeps its slope), exogenous differences are
// held at zero. With a policy, control steps apply along the way.
ForecastResult forecast(const CvarEstimate& est, const TimeFrame& frame, int horizon,
                        const ControlPolicy* policy, BandOptions& options);

CostReport cost_report(const TimeFrame& observed, const SimulationPath& counterfactual,
                       int reference_year, const std::vector<std::string>& log_vars);

// The direct feedback rule attains the stated objective exactly only when the
// system carries no deterministic drift; constants, step dummies and broken
// trends shift the controlled resting level. This re-targets the rule: the
// attained zero-shock level is affine in the objective vector, so m + 1 probe
// simulations over `horizon` years identify the exact adjustment. Returns the
// policy rebuilt with the adjusted objective (the requested one is kept in
// b_star_requested).
ControlPolicy calibrate_policy_target(const CvarEstimate& est, const LongRunRep& rep,
                                      const ControlPolicy& policy, const TimeFrame& frame,
                                      int horizon = 300);

}  // namespace cvar
