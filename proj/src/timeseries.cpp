#include "cvar/timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cvar/errors.hpp"
#include "cvar/linalg.hpp"

namespace cvar {

Role role_from_string(const std::string& s) {
    if (s == "endogenous" || s == "endo") return Role::Endogenous;
    if (s == "exogenous" || s == "exog") return Role::Exogenous;
    if (s == "deterministic" || s == "det") return Role::Deterministic;
    throw Error(ErrorCode::InvalidArgument, "unknown role '" + s + "'");
}

const char* role_name(Role r) {
    switch (r) {
        case Role::Endogenous: return "endogenous";
        case Role::Exogenous: return "exogenous";
        case Role::Deterministic: return "deterministic";
    }
    return "?";
}

TimeFrame::TimeFrame(std::vector<int> years, Eigen::MatrixXd values,
                     std::vector<std::string> names, std::vector<Role> roles,
                     Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> missing)
    : years_(std::move(years)),
      values_(std::move(values)),
      names_(std::move(names)),
      roles_(std::move(roles)),
      missing_(std::move(missing)) {
    const auto t = static_cast<Eigen::Index>(years_.size());
    const auto n = static_cast<Eigen::Index>(names_.size());
    if (values_.rows() != t || values_.cols() != n || missing_.rows() != t ||
        missing_.cols() != n || roles_.size() != names_.size())
        throw Error(ErrorCode::InvalidArgument, "TimeFrame: inconsistent dimensions");
    for (std::size_t i = 1; i < years_.size(); ++i) {
        if (years_[i] != years_[i - 1] + 1)
            throw Error(ErrorCode::NonContiguousYears,
                        "years must increase with unit step (at " +
                            std::to_string(years_[i]) + ")");
    }
    std::set<std::string> seen;
    for (const auto& name : names_)
        if (!seen.insert(name).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate column name '" + name + "'");
}

int TimeFrame::column(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    throw Error(ErrorCode::UnknownColumn, "unknown column '" + name + "'");
}

bool TimeFrame::has_column(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

int TimeFrame::row_of_year(int year) const {
    if (years_.empty() || year < years_.front() || year > years_.back())
        throw Error(ErrorCode::InvalidArgument,
                    "year " + std::to_string(year) + " outside sample");
    return year - years_.front();
}

bool TimeFrame::any_missing(int col) const {
    for (int t = 0; t < this->t(); ++t)
        if (missing_(t, col)) return true;
    return false;
}

std::vector<int> TimeFrame::columns_with_role(Role r) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < roles_.size(); ++i)
        if (roles_[i] == r) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<std::string> TimeFrame::names_with_role(Role r) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < roles_.size(); ++i)
        if (roles_[i] == r) out.push_back(names_[i]);
    return out;
}

Eigen::MatrixXd TimeFrame::dense_block(const std::vector<int>& cols) const {
    Eigen::MatrixXd out(t(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (int i = 0; i < t(); ++i) {
            if (missing_(i, cols[j]))
                throw Error(ErrorCode::MissingValue,
                            "column '" + names_[cols[j]] + "' has a missing value at year " +
                                std::to_string(years_[i]));
            out(i, static_cast<Eigen::Index>(j)) = values_(i, cols[j]);
        }
    }
    return out;
}

void TimeFrame::require_prepared() const {
    for (std::size_t j = 0; j < names_.size(); ++j) {
        if (roles_[j] == Role::Deterministic) continue;
        if (any_missing(static_cast<int>(j)))
            throw Error(ErrorCode::MissingValue,
                        "column '" + names_[j] + "' still has missing values");
    }
}

TimeFrame TimeFrame::with_values(
    Eigen::MatrixXd values, Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> missing) const {
    return TimeFrame(years_, std::move(values), names_, roles_, std::move(missing));
}

// --- CSV -------------------------------------------------------------------

namespace {

std::vector<std::string> split_line(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, delim)) out.push_back(cell);
    if (!line.empty() && line.back() == delim) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool is_missing_token(const std::string& s) {
    return s.empty() || s == "NA" || s == "na" || s == "nan" || s == "NaN" || s == ".";
}

double parse_double(const std::string& s, int line_no, const std::string& col) {
    const std::string t = trim(s);
    double value = 0.0;
    const auto* begin = t.data();
    const auto* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw Error(ErrorCode::NonNumericCell, "non-numeric cell '" + s + "' in column '" +
                                                   col + "' at line " + std::to_string(line_no));
    return value;
}

}  // namespace

TimeFrame load_frame(const std::string& path, const std::map<std::string, Role>& schema,
                     const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");

    std::string line;
    // Header (skip comment lines).
    do {
        if (!std::getline(in, line)) throw Error(ErrorCode::Io, "empty file '" + path + "'");
    } while (!line.empty() && line[0] == '#');

    const auto header = split_line(line, options.delimiter);
    int year_col = -1;
    std::vector<std::string> names;
    std::vector<int> data_cols;
    for (std::size_t j = 0; j < header.size(); ++j) {
        const std::string name = trim(header[j]);
        if (name == "year") {
            year_col = static_cast<int>(j);
        } else {
            names.push_back(name);
            data_cols.push_back(static_cast<int>(j));
        }
    }
    if (year_col < 0) throw Error(ErrorCode::Io, "no 'year' column in '" + path + "'");

    std::vector<Role> roles;
    for (const auto& name : names) {
        auto it = schema.find(name);
        if (it == schema.end())
            throw Error(ErrorCode::UnknownColumn,
                        "column '" + name + "' not named in schema");
        roles.push_back(it->second);
    }
    for (const auto& [name, role] : schema) {
        (void)role;
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw Error(ErrorCode::UnknownColumn,
                        "schema names column '" + name + "' absent from file");
    }

    std::vector<int> years;
    std::vector<std::vector<double>> rows;
    std::vector<std::vector<bool>> miss_rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty() || line[0] == '#') continue;
        const auto cells = split_line(line, options.delimiter);
        if (cells.size() != header.size())
            throw Error(ErrorCode::Io, "line " + std::to_string(line_no) + " has " +
                                           std::to_string(cells.size()) + " fields, expected " +
                                           std::to_string(header.size()));
        const double yd = parse_double(cells[year_col], line_no, "year");
        const int year = static_cast<int>(yd);
        if (static_cast<double>(year) != yd)
            throw Error(ErrorCode::NonNumericCell,
                        "year is not an integer at line " + std::to_string(line_no));
        std::vector<double> row(names.size(), 0.0);
        std::vector<bool> miss(names.size(), false);
        for (std::size_t j = 0; j < names.size(); ++j) {
            const std::string cell = trim(cells[data_cols[j]]);
            if (is_missing_token(cell)) {
                miss[j] = true;
            } else {
                row[j] = parse_double(cell, line_no, names[j]);
            }
        }
        years.push_back(year);
        rows.push_back(std::move(row));
        miss_rows.push_back(std::move(miss));
    }
    if (years.empty()) throw Error(ErrorCode::Io, "no data rows in '" + path + "'");

    // Sort by year, reject duplicates, handle gaps.
    std::vector<std::size_t> order(years.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return years[a] < years[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (years[order[i]] == years[order[i - 1]])
            throw Error(ErrorCode::DuplicateYear,
                        "duplicate year " + std::to_string(years[order[i]]));

    const int first = years[order.front()];
    const int last = years[order.back()];
    const int span = last - first + 1;
    if (span != static_cast<int>(years.size()) && !options.fill_year_gaps)
        throw Error(ErrorCode::NonContiguousYears,
                    "years are not contiguous; pass fill_year_gaps to insert missing rows");

    const auto n = static_cast<Eigen::Index>(names.size());
    Eigen::MatrixXd values = Eigen::MatrixXd::Zero(span, n);
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> missing =
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(span, n, true);
    std::vector<int> all_years(span);
    for (int i = 0; i < span; ++i) all_years[i] = first + i;
    for (std::size_t i : order) {
        const int r = years[i] - first;
        for (Eigen::Index j = 0; j < n; ++j) {
            values(r, j) = rows[i][static_cast<std::size_t>(j)];
            missing(r, j) = miss_rows[i][static_cast<std::size_t>(j)];
        }
    }

    return TimeFrame(std::move(all_years), std::move(values), std::move(names),
                     std::move(roles), std::move(missing));
}

void write_frame(const TimeFrame& frame, const std::string& path, char delimiter) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    out << "year";
    for (const auto& name : frame.names()) out << delimiter << name;
    out << "\n";
    out.precision(17);
    for (int t = 0; t < frame.t(); ++t) {
        out << frame.years()[t];
        for (int j = 0; j < frame.n_cols(); ++j) {
            out << delimiter;
            if (!frame.missing()(t, j)) out << frame.values()(t, j);
        }
        out << "\n";
    }
}

// --- Transforms --------------------------------------------------------------

TimeFrame interpolate_linear(const TimeFrame& frame, const std::string& series) {
    const int col = frame.column(series);
    std::vector<int> anchors;
    for (int t = 0; t < frame.t(); ++t)
        if (!frame.missing()(t, col)) anchors.push_back(t);
    if (anchors.size() < 2)
        throw Error(ErrorCode::MissingValue,
                    "interpolate: '" + series + "' needs at least 2 observed anchors");
    if (anchors.front() != 0 || anchors.back() != frame.t() - 1)
        throw Error(ErrorCode::MissingValue,
                    "interpolate: '" + series + "' has leading or trailing missing values "
                    "(interior interpolation only)");

    Eigen::MatrixXd values = frame.values();
    auto missing = frame.missing();
    for (std::size_t a = 0; a + 1 < anchors.size(); ++a) {
        const int lo = anchors[a];
        const int hi = anchors[a + 1];
        const double v_lo = values(lo, col);
        const double v_hi = values(hi, col);
        for (int t = lo + 1; t < hi; ++t) {
            const double w = static_cast<double>(t - lo) / static_cast<double>(hi - lo);
            values(t, col) = v_lo + w * (v_hi - v_lo);
            missing(t, col) = false;
        }
    }
    return frame.with_values(std::move(values), std::move(missing));
}

TimeFrame backcast_growth(const TimeFrame& frame, const std::string& target,
                          const std::string& reference, int start_year) {
    const int tc = frame.column(target);
    const int rc = frame.column(reference);
    const int start = frame.row_of_year(start_year);
    if (frame.missing()(start, tc))
        throw Error(ErrorCode::MissingValue,
                    "backcast: target '" + target + "' missing at start year " +
                        std::to_string(start_year));
    for (int t = 0; t <= start; ++t)
        if (frame.missing()(t, rc))
            throw Error(ErrorCode::MissingReference,
                        "backcast: reference '" + reference + "' missing at year " +
                            std::to_string(frame.years()[t]));

    Eigen::MatrixXd values = frame.values();
    auto missing = frame.missing();
    // target(t) = target(start) - sum_{s=t+1..start} d ref(s), built backwards.
    for (int t = start - 1; t >= 0; --t) {
        const double dref = values(t + 1, rc) - values(t, rc);
        values(t, tc) = values(t + 1, tc) - dref;
        missing(t, tc) = false;
    }
    return frame.with_values(std::move(values), std::move(missing));
}

TimeFrame regression_splice(const TimeFrame& frame, const std::string& old_series,
                            const std::string& new_series, int lags, int splice_year,
                            SpliceReport* report) {
    if (lags < 0) throw Error(ErrorCode::InvalidArgument, "splice: lags must be >= 0");
    const int oc = frame.column(old_series);
    const int nc = frame.column(new_series);
    const int splice_row = frame.row_of_year(splice_year);

    // Overlap rows: both observed, all lag rows of `new` observed, at or
    // before the splice year.
    std::vector<int> overlap;
    for (int t = lags; t <= splice_row; ++t) {
        if (frame.missing()(t, oc) || frame.missing()(t, nc)) continue;
        bool ok = true;
        for (int l = 1; l <= lags; ++l)
            if (frame.missing()(t - l, nc)) ok = false;
        if (ok) overlap.push_back(t);
    }
    const int need = 10 * (lags + 1);
    if (static_cast<int>(overlap.size()) < need)
        throw Error(ErrorCode::InsufficientOverlap,
                    "splice: overlap of " + std::to_string(overlap.size()) +
                        " observations, need >= " + std::to_string(need));

    const auto rows = static_cast<Eigen::Index>(overlap.size());
    Eigen::MatrixXd z(rows, 2 + lags);
    Eigen::MatrixXd y(rows, 1);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const int t = overlap[static_cast<std::size_t>(i)];
        z(i, 0) = 1.0;
        for (int l = 0; l <= lags; ++l) z(i, 1 + l) = frame.values()(t - l, nc);
        y(i, 0) = frame.values()(t, oc);
    }
    Eigen::MatrixXd coef = ols_coefficients(y, z);
    const Eigen::MatrixXd resid = y - z * coef;
    const double tss = (y.array() - y.mean()).square().sum();
    const double r2 = tss > 0 ? 1.0 - resid.squaredNorm() / tss : 1.0;
    if (report) {
        report->r_squared = r2;
        report->coefficients = coef.col(0);
        report->overlap_obs = static_cast<int>(rows);
    }

    Eigen::MatrixXd values = frame.values();
    auto missing = frame.missing();
    for (int t = splice_row + 1; t < frame.t(); ++t) {
        bool ok = !frame.missing()(t, nc);
        for (int l = 1; l <= lags && ok; ++l)
            if (t - l < 0 || frame.missing()(t - l, nc)) ok = false;
        if (!ok)
            throw Error(ErrorCode::MissingReference,
                        "splice: '" + new_series + "' missing in forecast range at year " +
                            std::to_string(frame.years()[t]));
        double fitted = coef(0, 0);
        for (int l = 0; l <= lags; ++l) fitted += coef(1 + l, 0) * values(t - l, nc);
        values(t, oc) = fitted;
        missing(t, oc) = false;
    }
    return frame.with_values(std::move(values), std::move(missing));
}

// --- Deterministics ----------------------------------------------------------

std::vector<std::string> DeterministicSpec::unrestricted_labels() const {
    std::vector<std::string> out;
    if (constant) out.emplace_back("const");
    auto breaks = step_dummies;
    std::sort(breaks.begin(), breaks.end());
    for (int b : breaks) out.push_back("step" + std::to_string(b));
    return out;
}

std::vector<std::string> DeterministicSpec::restricted_labels() const {
    std::vector<std::string> out;
    if (restricted_constant) out.emplace_back("rconst");
    auto breaks = restricted_trends;
    std::sort(breaks.begin(), breaks.end());
    for (int b : breaks) out.push_back("trend" + std::to_string(b));
    return out;
}

Eigen::VectorXd restricted_deterministic_row(const DeterministicSpec& spec, int year,
                                             int origin_year) {
    Eigen::VectorXd row(spec.n_restricted());
    Eigen::Index j = 0;
    if (spec.restricted_constant) row(j++) = 1.0;
    auto breaks = spec.restricted_trends;
    std::sort(breaks.begin(), breaks.end());
    for (int b : breaks)
        row(j++) = year >= b ? static_cast<double>(year - origin_year + 1) : 0.0;
    return row;
}

Eigen::VectorXd unrestricted_deterministic_row(const DeterministicSpec& spec, int year) {
    Eigen::VectorXd row(spec.n_unrestricted());
    Eigen::Index j = 0;
    if (spec.constant) row(j++) = 1.0;
    auto breaks = spec.step_dummies;
    std::sort(breaks.begin(), breaks.end());
    for (int b : breaks) row(j++) = year >= b ? 1.0 : 0.0;
    return row;
}

DeterministicMatrices build_deterministics(const DeterministicSpec& spec,
                                           const std::vector<int>& years) {
    if (years.empty())
        throw Error(ErrorCode::InvalidArgument, "build_deterministics: no years");
    for (std::size_t i = 1; i < years.size(); ++i)
        if (years[i] != years[i - 1] + 1)
            throw Error(ErrorCode::NonContiguousYears, "years must be contiguous");
    auto check_break = [&](int b) {
        if (b < years.front() || b > years.back())
            throw Error(ErrorCode::BreakOutsideSample,
                        "break year " + std::to_string(b) + " outside sample " +
                            std::to_string(years.front()) + ".." + std::to_string(years.back()));
    };
    for (int b : spec.step_dummies) check_break(b);
    for (int b : spec.restricted_trends) check_break(b);

    const auto t = static_cast<Eigen::Index>(years.size());
    DeterministicMatrices out;
    out.restricted = Eigen::MatrixXd(t, spec.n_restricted());
    out.unrestricted = Eigen::MatrixXd(t, spec.n_unrestricted());
    for (Eigen::Index i = 0; i < t; ++i) {
        out.restricted.row(i) =
            restricted_deterministic_row(spec, years[static_cast<std::size_t>(i)], years.front());
        out.unrestricted.row(i) =
            unrestricted_deterministic_row(spec, years[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace cvar
