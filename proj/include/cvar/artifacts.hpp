#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvar/control.hpp"
#include "cvar/estimator.hpp"
#include "cvar/kvfile.hpp"
#include "cvar/restrictions.hpp"
#include "cvar/simulate.hpp"

namespace cvar {

// Shortest round-trip decimal rendering (std::to_chars).
std::string format_double(double v);

// --- model spec file ---------------------------------------------------------
// lag_order, rank, constant, step_dummy, restricted_constant, broken_trend,
// exog, exog_lag, normalize.
CvarSpec parse_model_spec(const KvFile& kv);

// --- restriction file ----------------------------------------------------------
// Either pattern rows over named coefficients
//   beta 1 = y:1, c:free, m:0, h:free, trend1800:free
//   alpha 1 = y:free, c:free, m:0, h:0
// or explicit design matrices
//   beta_H 1 = [1 0 0; 0 1 0; ...]
// The row order of beta* coefficients is endogenous names first, then the
// restricted deterministic labels (rconst, trend<break>).
RestrictionSet parse_restrictions(const KvFile& kv, const std::vector<std::string>& endo,
                                  const DeterministicSpec& det, int rank);

// --- policy file ----------------------------------------------------------------
//   a = y:1, c:0.5        (or "a 1 = ...", "a 2 = ..." for several controls)
//   b = h:1
//   b_star = 0.7
//   start = 1900
//   ramp = 10
struct PolicyConfig {
    std::vector<std::vector<std::pair<std::string, double>>> a_cols;
    std::vector<std::vector<std::pair<std::string, double>>> b_cols;
    Eigen::VectorXd b_star;
    PhaseIn phase_in;
    bool calibrate = false;  // re-target the rule against deterministic drift
};
PolicyConfig parse_policy_config(const KvFile& kv);

// Column-built selection matrix over the named variables.
Eigen::MatrixXd selection_matrix(
    const std::vector<std::vector<std::pair<std::string, double>>>& cols,
    const std::vector<std::string>& names);

// --- estimate artifact (versioned structured text) ----------------------------
void write_estimate(const CvarEstimate& est, const std::string& path,
                    const std::string& config_hash, std::uint64_t seed);
CvarEstimate read_estimate(const std::string& path);

// --- plot-ready tables ----------------------------------------------------------
// Delimiter-separated path table: year column plus one block per series.
struct PathTable {
    std::vector<int> years;
    std::vector<std::string> columns;
    Eigen::MatrixXd values;
};
void write_path_table(const PathTable& table, const std::string& path,
                      const std::string& header_comment, const std::string& units_line,
                      char delimiter = ',');

// Self-contained SVG with observed/counterfactual lines and a shaded band.
void write_band_svg(const std::string& path, const std::string& title,
                    const std::vector<int>& years, const Eigen::VectorXd& observed,
                    const Eigen::VectorXd& central, const Eigen::VectorXd& lower,
                    const Eigen::VectorXd& upper);

}  // namespace cvar
