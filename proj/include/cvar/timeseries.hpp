#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cvar {

enum class Role { Endogenous, Exogenous, Deterministic };

Role role_from_string(const std::string& s);
const char* role_name(Role r);

// Dated annual multivariate series. Years are strictly increasing with unit
// step; `missing` marks cells that still need interpolation/backcasting.
// Immutable by convention once preparation is done: transforms return a new
// frame.
class TimeFrame {
  public:
    TimeFrame() = default;
    TimeFrame(std::vector<int> years, Eigen::MatrixXd values,
              std::vector<std::string> names, std::vector<Role> roles,
              Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> missing);

    int t() const { return static_cast<int>(years_.size()); }
    int n_cols() const { return static_cast<int>(names_.size()); }
    const std::vector<int>& years() const { return years_; }
    int first_year() const { return years_.front(); }
    int last_year() const { return years_.back(); }
    const Eigen::MatrixXd& values() const { return values_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Role>& roles() const { return roles_; }
    const Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>& missing() const {
        return missing_;
    }

    int column(const std::string& name) const;          // throws UnknownColumn
    int row_of_year(int year) const;                     // throws InvalidArgument
    bool has_column(const std::string& name) const;
    bool any_missing(int col) const;

    // Columns of a given role, in frame order.
    std::vector<int> columns_with_role(Role r) const;
    std::vector<std::string> names_with_role(Role r) const;

    // T x |cols| matrix of the named columns; throws MissingValue if any
    // requested cell is masked.
    Eigen::MatrixXd dense_block(const std::vector<int>& cols) const;

    // Verifies the frame invariants relevant for estimation: no masked cells
    // in endogenous/exogenous columns.
    void require_prepared() const;

    TimeFrame with_values(Eigen::MatrixXd values,
                          Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> missing) const;

  private:
    std::vector<int> years_;
    Eigen::MatrixXd values_;
    std::vector<std::string> names_;
    std::vector<Role> roles_;
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> missing_;
};

struct CsvOptions {
    char delimiter = ',';
    bool fill_year_gaps = false;  // insert missing rows instead of rejecting
};

// Reads a delimiter-separated file with a header row containing `year`.
// `schema` maps every non-year column name to its role; a schema entry with
// no matching column is an error, as is a file column absent from the schema.
TimeFrame load_frame(const std::string& path, const std::map<std::string, Role>& schema,
                     const CsvOptions& options = {});

// Re-emits a frame in the same format (missing cells become empty fields).
void write_frame(const TimeFrame& frame, const std::string& path,
                 char delimiter = ',');

// --- Reconstruction transforms -------------------------------------------

// Linear interpolation of interior missing values between the nearest
// observed anchors. Leading/trailing missing values are an error.
TimeFrame interpolate_linear(const TimeFrame& frame, const std::string& series);

// Extends `target` backwards from `start` using the growth of `reference`:
// target(t) = target(start) - sum_{s=t+1..start} d reference(s) for t < start.
// Both series are assumed to be in logarithms already.
TimeFrame backcast_growth(const TimeFrame& frame, const std::string& target,
                          const std::string& reference, int start_year);

struct SpliceReport {
    double r_squared = 0.0;
    Eigen::VectorXd coefficients;  // constant, new, lags of new
    int overlap_obs = 0;
};

// Regresses `old_series` on {constant, new_series and its lags} over their
// overlap up to splice_year, then replaces old_series after splice_year with
// the fitted values.
TimeFrame regression_splice(const TimeFrame& frame, const std::string& old_series,
                            const std::string& new_series, int lags, int splice_year,
                            SpliceReport* report = nullptr);

// --- Deterministic terms ---------------------------------------------------

// Deterministic design. The unrestricted block carries the constant and step
// dummies 1{t>=break}; the restricted block (loaded through the cointegration
// space) carries an optional restricted constant and broken trends
// t * 1{t>=break}, with t counted from 1 at the first sample year.
struct DeterministicSpec {
    bool constant = false;
    std::vector<int> step_dummies;
    bool restricted_constant = false;
    std::vector<int> restricted_trends;

    int n_unrestricted() const {
        return (constant ? 1 : 0) + static_cast<int>(step_dummies.size());
    }
    int n_restricted() const {
        return (restricted_constant ? 1 : 0) + static_cast<int>(restricted_trends.size());
    }
    // Column labels in build order (constants first, then breaks ascending).
    std::vector<std::string> unrestricted_labels() const;
    std::vector<std::string> restricted_labels() const;
};

struct DeterministicMatrices {
    Eigen::MatrixXd restricted;    // T x n_restricted
    Eigen::MatrixXd unrestricted;  // T x n_unrestricted
};

// Evaluates one row of the design at a given year (works past the sample end,
// where the broken trend keeps growing). origin_year is the year whose trend
// index is 1.
Eigen::VectorXd restricted_deterministic_row(const DeterministicSpec& spec, int year,
                                             int origin_year);
Eigen::VectorXd unrestricted_deterministic_row(const DeterministicSpec& spec, int year);

DeterministicMatrices build_deterministics(const DeterministicSpec& spec,
                                           const std::vector<int>& years);

}  // namespace cvar
