#include "cvar/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cvar/errors.hpp"
#include "cvar/parallel.hpp"
#include "cvar/rng.hpp"
#include "cvar/stats.hpp"

namespace cvar {

namespace {

// Exogenous difference row feeding the equation dated `year`.
Eigen::VectorXd exog_diff_row(const CvarEstimate& est, const TimeFrame& frame, int year) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(est.spec.exogenous.size()));
    for (std::size_t e = 0; e < est.spec.exogenous.size(); ++e) {
        const int c = frame.column(est.spec.exogenous[e]);
        const int s = frame.row_of_year(year) - est.spec.exog_lag;
        out(static_cast<Eigen::Index>(e)) =
            frame.values()(s, c) - frame.values()(s - 1, c);
    }
    return out;
}

Eigen::VectorXd frame_det_row(const CvarEstimate& est, const TimeFrame& frame, int year,
                              bool hold_last) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(est.frame_det_names.size()));
    for (std::size_t d = 0; d < est.frame_det_names.size(); ++d) {
        const int c = frame.column(est.frame_det_names[d]);
        const int row = hold_last && year > frame.last_year() ? frame.t() - 1
                                                              : frame.row_of_year(year);
        out(static_cast<Eigen::Index>(d)) = frame.values()(row, c);
    }
    return out;
}

int residual_row_of_year(const CvarEstimate& est, int year) {
    if (year < est.years.front() || year > est.years.back())
        throw Error(ErrorCode::InvalidArgument,
                    "no residual for year " + std::to_string(year));
    return year - est.years.front();
}

// Walks the controlled system over `sim_years` (each entry is a produced
// year), mutating `levels` rows in place. Rows before the first produced year
// must already hold valid history (k lags at least). `shock_for(year)` yields
// the innovation for the equation dated `year`. Injections are recorded for
// every state year at which the control is evaluated.
void run_controlled(const CvarEstimate& est, const VecmDynamics& dyn,
                    const ControlPolicy* policy, const TimeFrame& frame,
                    const std::vector<int>& path_years, Eigen::MatrixXd& levels,
                    Eigen::MatrixXd* injections, int first_produced_year, int horizon_end,
                    const std::function<Eigen::VectorXd(int)>& shock_for,
                    bool out_of_sample) {
    const int base = path_years.front();
    auto idx = [&](int year) { return year - base; };

    for (int year = first_produced_year; year <= horizon_end; ++year) {
        const int state_year = year - 1;
        Eigen::VectorXd x_state = levels.row(idx(state_year));
        Eigen::VectorXd xc = x_state;
        if (policy) {
            xc = apply_control(*policy, x_state, state_year);
            if (injections)
                injections->row(idx(state_year)) =
                    policy->a.transpose() * (xc - x_state);
        }
        std::vector<Eigen::VectorXd> window;
        window.push_back(xc);
        for (int lag = 1; lag < est.k; ++lag)
            window.push_back(levels.row(idx(state_year - lag)));

        Eigen::VectorXd dexog = Eigen::VectorXd::Zero(
            static_cast<Eigen::Index>(est.spec.exogenous.size()));
        if (!out_of_sample || year <= frame.last_year())
            dexog = exog_diff_row(est, frame, year);
        const Eigen::VectorXd fd = frame_det_row(est, frame, year, true);

        levels.row(idx(year)) = dyn.step(window, year, dexog, fd, shock_for(year));
    }
    // Record the control evaluated at the final produced year as well; it has
    // no successor to feed but belongs to the injection series.
    if (policy && injections) {
        const int last = horizon_end;
        Eigen::VectorXd x_state = levels.row(idx(last));
        const Eigen::VectorXd xc = apply_control(*policy, x_state, last);
        injections->row(idx(last)) = policy->a.transpose() * (xc - x_state);
    }
}

}  // namespace

SimulationPath replay_counterfactual(const CvarEstimate& est, const ControlPolicy* policy,
                                     const TimeFrame& frame, const std::string& label) {
    frame.require_prepared();
    const auto endo_cols = frame.columns_with_role(Role::Endogenous);
    if (static_cast<int>(endo_cols.size()) != est.n)
        throw Error(ErrorCode::InvalidArgument, "frame does not match the estimate");

    const int start = policy ? policy->phase_in.start_year : frame.last_year() + 1;
    if (policy && (start <= est.years.front() - 1 || start > frame.last_year()))
        throw Error(ErrorCode::InvalidArgument,
                    "policy start " + std::to_string(start) +
                        " outside the usable sample (needs >= " +
                        std::to_string(est.years.front()) + ")");

    const VecmDynamics dyn = VecmDynamics::from_estimate(est);

    SimulationPath path;
    path.years = frame.years();
    path.names = est.endo_names;
    path.levels = frame.dense_block(endo_cols);
    path.injections =
        Eigen::MatrixXd::Zero(frame.t(), policy ? policy->m() : 0);
    path.label = label;

    if (!policy || start >= frame.last_year() + 1) return path;

    run_controlled(est, dyn, policy, frame, path.years, path.levels,
                   &path.injections, start + 1, frame.last_year(),
                   [&](int year) -> Eigen::VectorXd {
                       return est.residuals.row(residual_row_of_year(est, year));
                   },
                   false);
    return path;
}

namespace {

std::pair<int, int> residual_window_rows(const CvarEstimate& est, int from, int to) {
    int lo = from == 0 ? est.years.front() : from;
    int hi = to == 0 ? est.years.back() : to;
    lo = std::max(lo, est.years.front());
    hi = std::min(hi, est.years.back());
    if (hi < lo)
        throw Error(ErrorCode::InvalidArgument, "empty residual window");
    return {lo - est.years.front(), hi - est.years.front()};
}

}  // namespace

BootstrapBands bootstrap_bands(const CvarEstimate& est, const ControlPolicy* policy,
                               const TimeFrame& frame, BandOptions& options) {
    if (options.replications < (options.degenerate_identical_replicates ? 2 : 99))
        throw Error(ErrorCode::InvalidArgument, "bootstrap_bands: need B >= 99");
    const auto [row_lo, row_hi] = residual_window_rows(est, options.residual_from,
                                                       options.residual_to);
    const int window = row_hi - row_lo + 1;
    if (window < 10)
        throw Error(ErrorCode::InvalidArgument,
                    "residual window of " + std::to_string(window) + " rows is too short");
    options.warned_short_window = window < 30;

    const VecmDynamics dyn = VecmDynamics::from_estimate(est);
    const auto endo_cols = frame.columns_with_role(Role::Endogenous);
    const Eigen::MatrixXd observed = frame.dense_block(endo_cols);
    const int start = policy ? std::max(policy->phase_in.start_year, est.years.front())
                             : est.years.front();
    const int t = frame.t();
    const int b_count = options.replications;

    std::vector<Eigen::MatrixXd> paths(b_count);
    parallel_for(
        b_count,
        [&](int b) {
            Rng rng = Rng::child(options.seed,
                                 options.degenerate_identical_replicates ? 0 : b);
            Eigen::MatrixXd levels = observed;
            run_controlled(est, dyn, policy, frame, frame.years(), levels, nullptr,
                           start + 1, frame.last_year(),
                           [&](int) -> Eigen::VectorXd {
                               const auto pick =
                                   row_lo + static_cast<int>(rng.uniform_index(window));
                               return est.residuals.row(pick);
                           },
                           false);
            paths[b] = levels;
        },
        options.threads);

    BootstrapBands bands;
    bands.years = frame.years();
    bands.replications = b_count;
    bands.seed = options.seed;
    bands.lower_q = options.lower_q;
    bands.upper_q = options.upper_q;
    bands.mean = Eigen::MatrixXd::Zero(t, est.n);
    bands.lower = Eigen::MatrixXd::Zero(t, est.n);
    bands.upper = Eigen::MatrixXd::Zero(t, est.n);
    std::vector<double> cell(b_count);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < est.n; ++j) {
            for (int b = 0; b < b_count; ++b) cell[b] = paths[b](i, j);
            bands.mean(i, j) = mean(cell);
            bands.lower(i, j) = quantile(cell, options.lower_q);
            bands.upper(i, j) = quantile(cell, options.upper_q);
        }
    }
    return bands;
}

ForecastResult forecast(const CvarEstimate& est, const TimeFrame& frame, int horizon,
                        const ControlPolicy* policy, BandOptions& options) {
    if (horizon < 1) throw Error(ErrorCode::InvalidArgument, "horizon must be >= 1");
    frame.require_prepared();
    const auto endo_cols = frame.columns_with_role(Role::Endogenous);
    const Eigen::MatrixXd observed = frame.dense_block(endo_cols);
    const VecmDynamics dyn = VecmDynamics::from_estimate(est);

    const int t_obs = frame.t();
    const int total = t_obs + horizon;
    std::vector<int> years(total);
    for (int i = 0; i < total; ++i) years[i] = frame.first_year() + i;

    auto simulate_one = [&](const std::function<Eigen::VectorXd(int)>& shock_for) {
        Eigen::MatrixXd levels = Eigen::MatrixXd::Zero(total, est.n);
        levels.topRows(t_obs) = observed;
        Eigen::MatrixXd injections =
            Eigen::MatrixXd::Zero(total, policy ? policy->m() : 0);
        run_controlled(est, dyn, policy, frame, years, levels,
                       policy ? &injections : nullptr, frame.last_year() + 1,
                       years.back(), shock_for, true);
        return std::make_pair(levels, injections);
    };

    ForecastResult out;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(est.n);
    auto [point_levels, point_inj] = simulate_one([&](int) { return zero; });
    out.point.years = years;
    out.point.names = est.endo_names;
    out.point.levels = point_levels;
    out.point.injections = point_inj;
    out.point.label = policy ? "forecast-policy" : "forecast";

    if (options.replications < 99)
        throw Error(ErrorCode::InvalidArgument, "forecast: need B >= 99");
    const auto [row_lo, row_hi] = residual_window_rows(est, options.residual_from,
                                                       options.residual_to);
    const int window = row_hi - row_lo + 1;
    if (window < 10)
        throw Error(ErrorCode::InvalidArgument, "residual window too short");
    options.warned_short_window = window < 30;

    std::vector<Eigen::MatrixXd> paths(options.replications);
    parallel_for(
        options.replications,
        [&](int b) {
            Rng rng = Rng::child(options.seed, b);
            auto [levels, inj] = simulate_one([&](int year) -> Eigen::VectorXd {
                (void)year;
                const auto pick = row_lo + static_cast<int>(rng.uniform_index(window));
                return est.residuals.row(pick);
            });
            (void)inj;
            paths[b] = levels.bottomRows(horizon);
        },
        options.threads);

    BootstrapBands bands;
    bands.years.assign(years.end() - horizon, years.end());
    bands.replications = options.replications;
    bands.seed = options.seed;
    bands.lower_q = options.lower_q;
    bands.upper_q = options.upper_q;
    bands.mean = Eigen::MatrixXd::Zero(horizon, est.n);
    bands.lower = Eigen::MatrixXd::Zero(horizon, est.n);
    bands.upper = Eigen::MatrixXd::Zero(horizon, est.n);
    std::vector<double> cell(options.replications);
    for (int i = 0; i < horizon; ++i) {
        for (int j = 0; j < est.n; ++j) {
            for (int b = 0; b < options.replications; ++b) cell[b] = paths[b](i, j);
            bands.mean(i, j) = mean(cell);
            bands.lower(i, j) = quantile(cell, options.lower_q);
            bands.upper(i, j) = quantile(cell, options.upper_q);
        }
    }
    out.bands = bands;
    return out;
}

ControlPolicy calibrate_policy_target(const CvarEstimate& est, const LongRunRep& rep,
                                      const ControlPolicy& policy, const TimeFrame& frame,
                                      int horizon) {
    frame.require_prepared();
    const int m = policy.m();
    if (m == 0) return policy;
    if (horizon < 50)
        throw Error(ErrorCode::InvalidArgument, "calibration horizon too short");
    const auto endo_cols = frame.columns_with_role(Role::Endogenous);
    const Eigen::MatrixXd observed = frame.dense_block(endo_cols);
    const VecmDynamics dyn = VecmDynamics::from_estimate(est);
    const int start =
        std::max(policy.phase_in.start_year, est.years.front());
    const int end_year = std::max(frame.last_year(), start) + horizon;

    // Zero-shock attained target level for a trial objective.
    auto attained = [&](const Eigen::VectorXd& trial) {
        const ControlPolicy probe = build_policy(
            est, rep, policy.a, policy.b, trial, policy.phase_in);
        const int total = end_year - frame.first_year() + 1;
        std::vector<int> years(total);
        for (int i = 0; i < total; ++i) years[i] = frame.first_year() + i;
        Eigen::MatrixXd levels = Eigen::MatrixXd::Zero(total, est.n);
        levels.topRows(frame.t()) = observed;
        const Eigen::VectorXd zero = Eigen::VectorXd::Zero(est.n);
        run_controlled(est, dyn, &probe, frame, years, levels, nullptr, start + 1,
                       end_year, [&](int) { return zero; }, true);
        return Eigen::VectorXd(policy.b.transpose() * levels.row(total - 1).transpose());
    };

    const Eigen::VectorXd base = attained(policy.b_star_requested);
    Eigen::MatrixXd gain(m, m);
    for (int j = 0; j < m; ++j) {
        Eigen::VectorXd trial = policy.b_star_requested;
        trial(j) += 1.0;
        gain.col(j) = attained(trial) - base;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gain);
    lu.setThreshold(1e-10);
    if (!lu.isInvertible())
        throw Error(ErrorCode::NotControllable,
                    "target calibration failed: the objective does not move the "
                    "attained level");
    const Eigen::VectorXd adjusted =
        policy.b_star_requested + lu.solve(policy.b_star_requested - base);

    ControlPolicy out =
        build_policy(est, rep, policy.a, policy.b, adjusted, policy.phase_in);
    out.b_star_requested = policy.b_star_requested;
    return out;
}

CostReport cost_report(const TimeFrame& observed, const SimulationPath& counterfactual,
                       int reference_year, const std::vector<std::string>& log_vars) {
    CostReport report;
    report.reference_year = reference_year;
    const int cf_row = static_cast<int>(
        std::find(counterfactual.years.begin(), counterfactual.years.end(), reference_year) -
        counterfactual.years.begin());
    if (cf_row == static_cast<int>(counterfactual.years.size()))
        throw Error(ErrorCode::InvalidArgument,
                    "reference year missing from the counterfactual path");
    const int obs_row = observed.row_of_year(reference_year);

    for (std::size_t j = 0; j < counterfactual.names.size(); ++j) {
        const std::string& name = counterfactual.names[j];
        const int col = observed.column(name);
        const double cf = counterfactual.levels(cf_row, static_cast<Eigen::Index>(j));
        const double obs = observed.values()(obs_row, col);
        const bool log_var =
            std::find(log_vars.begin(), log_vars.end(), name) != log_vars.end();

        report.variables.push_back(name);
        report.is_log.push_back(log_var);
        report.percent_change.push_back(log_var ? 100.0 * (std::exp(cf - obs) - 1.0)
                                                : 0.0);
        report.level_change.push_back(cf - obs);

        // Latest observed year whose value equals the counterfactual
        // reference value, interpolating between adjacent years.
        double eq_year = std::numeric_limits<double>::quiet_NaN();
        for (int t = 0; t + 1 < observed.t(); ++t) {
            const double v0 = observed.values()(t, col);
            const double v1 = observed.values()(t + 1, col);
            if ((v0 - cf) * (v1 - cf) <= 0.0 && v0 != v1) {
                eq_year = observed.years()[t] + (cf - v0) / (v1 - v0);
            } else if (v0 == cf && v0 == v1) {
                eq_year = observed.years()[t + 1];
            }
        }
        // Exact hit on the last observation.
        if (observed.values()(observed.t() - 1, col) == cf)
            eq_year = observed.years().back();
        report.equivalent_year.push_back(eq_year);
    }
    return report;
}

}  // namespace cvar
