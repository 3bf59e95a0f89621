#include "cvar/commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <algorithm>

#include "cvar/artifacts.hpp"
#include "cvar/control.hpp"
#include "cvar/diagnostics.hpp"
#include "cvar/errors.hpp"
#include "cvar/estimator.hpp"
#include "cvar/kvfile.hpp"
#include "cvar/longrun.hpp"
#include "cvar/restrictions.hpp"
#include "cvar/simulate.hpp"
#include "cvar/trace_test.hpp"

namespace fs = std::filesystem;

namespace cvar {

namespace {

std::map<std::string, Role> parse_schema(const std::string& value) {
    std::map<std::string, Role> schema;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::InvalidArgument,
                        "schema entries look like name:role, got '" + item + "'");
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        schema[strip(item.substr(0, colon))] = role_from_string(strip(item.substr(colon + 1)));
    }
    return schema;
}

// Accumulates the hash of every input file a command touches.
struct InputHash {
    std::string combined;
    void add(const std::string& path) {
        if (!path.empty()) combined += file_hash(path);
    }
    std::string hex() const { return content_hash(combined); }
};

std::ofstream open_output(const RunConfig& cfg, const std::string& name,
                          const InputHash& hash) {
    fs::create_directories(cfg.out_dir);
    const fs::path path = fs::path(cfg.out_dir) / name;
    if (fs::exists(path) && !cfg.force)
        throw Error(ErrorCode::WouldOverwrite,
                    path.string() + " exists; pass --force to overwrite");
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
    out << "# config " << hash.hex() << "  seed " << cfg.seed << "\n";
    return out;
}

std::string output_path(const RunConfig& cfg, const std::string& name, bool check) {
    fs::create_directories(cfg.out_dir);
    const fs::path path = fs::path(cfg.out_dir) / name;
    if (check && fs::exists(path) && !cfg.force)
        throw Error(ErrorCode::WouldOverwrite,
                    path.string() + " exists; pass --force to overwrite");
    return path.string();
}

TimeFrame load_data(const RunConfig& cfg, InputHash& hash) {
    if (cfg.data_path.empty())
        throw Error(ErrorCode::InvalidArgument, "no data file given (--data)");
    if (cfg.schema.empty())
        throw Error(ErrorCode::InvalidArgument, "no schema given (config key 'schema')");
    hash.add(cfg.data_path);
    CsvOptions opt;
    opt.delimiter = cfg.delimiter;
    opt.fill_year_gaps = cfg.fill_gaps;
    return load_frame(cfg.data_path, cfg.schema, opt);
}

CvarSpec load_spec(const RunConfig& cfg, InputHash& hash) {
    if (cfg.spec_path.empty())
        throw Error(ErrorCode::InvalidArgument, "no model spec given (--spec)");
    hash.add(cfg.spec_path);
    return parse_model_spec(KvFile::parse_file(cfg.spec_path));
}

// Fixes a searched rank via the trace test (bootstrap when no table exists).
int resolve_rank(const TimeFrame& frame, const CvarSpec& spec, const RunConfig& cfg,
                 std::string* note) {
    TraceMethod method = TraceMethod::AsymptoticTable;
    try {
        classify_deterministic_case(spec.deterministic, frame.first_year());
    } catch (const Error& e) {
        if (e.code() != ErrorCode::UseBootstrap) throw;
        method = TraceMethod::Bootstrap;
    }
    const int b = cfg.bootstrap > 0 ? cfg.bootstrap : 399;
    const TraceResult tr = trace_test(frame, spec, method, b, cfg.seed, cfg.threads);
    const int rank = tr.selected_rank(0.05);
    if (note)
        *note = "rank " + std::to_string(rank) + " selected by " +
                (method == TraceMethod::Bootstrap ? "bootstrap" : "asymptotic") +
                " trace test at the 5% level";
    return rank;
}

PolicyConfig load_policy_config(const RunConfig& cfg, InputHash& hash) {
    if (cfg.policy_path.empty())
        throw Error(ErrorCode::InvalidArgument, "no policy file given (--policy)");
    hash.add(cfg.policy_path);
    return parse_policy_config(KvFile::parse_file(cfg.policy_path));
}

ControlPolicy policy_from_config(const PolicyConfig& pc, const RunConfig& cfg,
                                 const CvarEstimate& est, const LongRunRep& rep,
                                 const TimeFrame* frame) {
    const Eigen::MatrixXd a = selection_matrix(pc.a_cols, est.endo_names);
    const Eigen::MatrixXd b = selection_matrix(pc.b_cols, est.endo_names);
    ControlPolicy policy = build_policy(est, rep, a, b, pc.b_star, pc.phase_in);
    if (pc.calibrate) {
        if (!frame)
            throw Error(ErrorCode::InvalidArgument,
                        "policy calibration needs the data file (--data)");
        policy = calibrate_policy_target(est, rep, policy, *frame);
    }
    (void)cfg;
    return policy;
}

CvarEstimate load_or_fit_estimate(const RunConfig& cfg, InputHash& hash,
                                  const TimeFrame** frame_out, TimeFrame& frame_storage) {
    if (!cfg.estimate_path.empty()) {
        hash.add(cfg.estimate_path);
        CvarEstimate est = read_estimate(cfg.estimate_path);
        if (!cfg.data_path.empty()) {
            frame_storage = load_data(cfg, hash);
            *frame_out = &frame_storage;
        } else {
            *frame_out = nullptr;
        }
        return est;
    }
    frame_storage = load_data(cfg, hash);
    *frame_out = &frame_storage;
    CvarSpec spec = load_spec(cfg, hash);
    if (!spec.rank_fixed()) spec.rank = resolve_rank(frame_storage, spec, cfg, nullptr);
    return fit(frame_storage, spec);
}

}  // namespace

void apply_config_file(RunConfig& cfg, const std::string& path,
                       const std::map<std::string, bool>& overridden) {
    const KvFile kv = KvFile::parse_file(path);
    cfg.config_path = path;
    auto skip = [&](const std::string& key) {
        auto it = overridden.find(key);
        return it != overridden.end() && it->second;
    };
    if (!skip("data") && kv.has("data")) cfg.data_path = kv.get_string("data");
    if (!skip("schema") && kv.has("schema")) cfg.schema = parse_schema(kv.get_string("schema"));
    if (!skip("delimiter") && kv.has("delimiter")) {
        const std::string d = kv.get_string("delimiter");
        cfg.delimiter = d == "tab" ? '\t' : d.empty() ? ',' : d[0];
    }
    if (!skip("fill_gaps")) cfg.fill_gaps = kv.get_bool_or("fill_gaps", cfg.fill_gaps);
    if (!skip("spec") && kv.has("spec")) cfg.spec_path = kv.get_string("spec");
    if (!skip("restrictions") && kv.has("restrictions"))
        cfg.restrictions_path = kv.get_string("restrictions");
    if (!skip("policy") && kv.has("policy")) cfg.policy_path = kv.get_string("policy");
    if (!skip("scenario") && kv.has("scenario")) cfg.scenario_path = kv.get_string("scenario");
    if (!skip("transforms") && kv.has("transforms"))
        cfg.transforms_path = kv.get_string("transforms");
    if (!skip("estimate") && kv.has("estimate")) cfg.estimate_path = kv.get_string("estimate");
    if (!skip("seed")) cfg.seed = static_cast<std::uint64_t>(kv.get_int_or("seed", cfg.seed));
    if (!skip("out") && kv.has("out")) cfg.out_dir = kv.get_string("out");
    if (!skip("bootstrap"))
        cfg.bootstrap = static_cast<int>(kv.get_int_or("bootstrap", cfg.bootstrap));
    if (!skip("threads"))
        cfg.threads = static_cast<unsigned>(kv.get_int_or("threads", cfg.threads));
    if (!skip("svg")) cfg.svg = kv.get_bool_or("svg", cfg.svg);
}

void cmd_prepare(const RunConfig& cfg) {
    InputHash hash;
    TimeFrame frame = load_data(cfg, hash);
    std::vector<std::string> log;

    if (!cfg.transforms_path.empty()) {
        hash.add(cfg.transforms_path);
        std::ifstream in(cfg.transforms_path);
        if (!in) throw Error(ErrorCode::Io, "cannot open '" + cfg.transforms_path + "'");
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::stringstream ss(line);
            std::string op;
            ss >> op;
            if (op.empty() || op[0] == '#') continue;
            if (op == "interpolate") {
                std::string col;
                ss >> col;
                frame = interpolate_linear(frame, col);
                log.push_back("interpolate " + col);
            } else if (op == "backcast") {
                std::string target, ref;
                int start = 0;
                ss >> target >> ref >> start;
                frame = backcast_growth(frame, target, ref, start);
                log.push_back("backcast " + target + " from " + ref + " before " +
                              std::to_string(start));
            } else if (op == "splice") {
                std::string old_col, new_col;
                int lags = 0, year = 0;
                ss >> old_col >> new_col >> lags >> year;
                SpliceReport rep;
                frame = regression_splice(frame, old_col, new_col, lags, year, &rep);
                log.push_back("splice " + old_col + " on " + new_col + " (" +
                              std::to_string(lags) + " lags) after " + std::to_string(year) +
                              ", R2 = " + format_double(rep.r_squared) + " on " +
                              std::to_string(rep.overlap_obs) + " overlap rows");
            } else {
                throw Error(ErrorCode::InvalidArgument,
                            cfg.transforms_path + ":" + std::to_string(line_no) +
                                ": unknown transform '" + op + "'");
            }
        }
    }

    const std::string out_csv = output_path(cfg, "prepared.csv", true);
    write_frame(frame, out_csv, cfg.delimiter);
    auto out = open_output(cfg, "transform_log.txt", hash);
    out << "# data " << cfg.data_path << " -> " << out_csv << "\n";
    if (log.empty()) out << "no transforms applied\n";
    for (const auto& l : log) out << l << "\n";
}

void cmd_estimate(const RunConfig& cfg) {
    InputHash hash;
    const TimeFrame frame = load_data(cfg, hash);
    CvarSpec spec = load_spec(cfg, hash);

    std::string rank_note;
    if (!spec.rank_fixed()) spec.rank = resolve_rank(frame, spec, cfg, &rank_note);

    CvarEstimate est = fit(frame, spec);
    std::string restriction_note;
    if (!cfg.restrictions_path.empty()) {
        hash.add(cfg.restrictions_path);
        const RestrictionSet set =
            parse_restrictions(KvFile::parse_file(cfg.restrictions_path), est.endo_names,
                               spec.deterministic, spec.rank);
        const RestrictedFit rf = estimate_restricted(frame, spec, set);
        restriction_note = "LR test of restrictions: " + format_double(rf.lr) + " ~ chi2(" +
                           std::to_string(rf.df) + "), p = " + format_double(rf.pvalue) +
                           ", " + std::to_string(rf.iterations) + " iterations";
        est = rf.estimate;
    }

    write_estimate(est, output_path(cfg, "estimate.txt", true), hash.hex(), cfg.seed);

    auto out = open_output(cfg, "estimate_report.txt", hash);
    out << "# cointegrated VAR estimate\n";
    out << "# units: coefficients in the scale of the input series; trend index 1 at "
        << est.first_year << "\n";
    out << "variables: ";
    for (const auto& n : est.endo_names) out << n << " ";
    out << "\nlag_order = " << est.k << ", rank = " << est.r << ", T_eff = " << est.t_eff
        << "\n";
    if (!rank_note.empty()) out << rank_note << "\n";
    if (!restriction_note.empty()) out << restriction_note << "\n";
    if (!spec.exogenous.empty())
        out << "note: exogenous regressors present; trace p-values carry no "
               "partial-system correction\n";
    out << "loglik = " << format_double(est.loglik) << "\n\n";

    auto print_matrix = [&](const std::string& name, const Eigen::MatrixXd& m,
                            const std::vector<std::string>& row_labels) {
        out << name << ":\n";
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            out << "  ";
            if (!row_labels.empty()) out << row_labels[static_cast<std::size_t>(i)] << ": ";
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                out << format_double(m(i, j)) << (j + 1 < m.cols() ? " " : "");
            out << "\n";
        }
    };
    std::vector<std::string> beta_labels = est.endo_names;
    for (const auto& l : spec.deterministic.restricted_labels()) beta_labels.push_back(l);
    print_matrix("beta_star", est.beta_star, beta_labels);
    print_matrix("alpha", est.alpha, est.endo_names);
    print_matrix("omega", est.omega, est.endo_names);
    out << "eigenvalues:";
    for (Eigen::Index i = 0; i < est.eigenvalues.size(); ++i)
        out << " " << format_double(est.eigenvalues(i));
    out << "\n";

    // Residual health: low-order autocorrelations, a portmanteau check and
    // the split-sample volatility ratio.
    const int max_lag = std::min(12, est.t_eff / 4);
    if (max_lag > est.k) {
        const ResidualDiagnostics d = residual_diagnostics(est, max_lag);
        out << "\nresidual diagnostics (lags 1.." << max_lag << ", bound +-"
            << format_double(d.acf_bound) << "):\n";
        for (int j = 0; j < est.n; ++j) {
            out << "  acf " << est.endo_names[j] << ":";
            for (int h = 0; h < std::min(6, max_lag); ++h)
                out << " " << format_double(d.acf(h, j));
            out << "\n";
        }
        out << "  portmanteau = " << format_double(d.portmanteau) << " ~ chi2("
            << d.portmanteau_df << "), p = " << format_double(d.portmanteau_pvalue)
            << "\n";
        out << "  residual sd by halves:";
        for (int j = 0; j < est.n; ++j)
            out << " " << est.endo_names[j] << " " << format_double(d.sd_first_half(j))
                << "/" << format_double(d.sd_second_half(j));
        out << "\n";
    }
}

void cmd_ranktest(const RunConfig& cfg) {
    InputHash hash;
    const TimeFrame frame = load_data(cfg, hash);
    const CvarSpec spec = load_spec(cfg, hash);

    TraceMethod method = TraceMethod::AsymptoticTable;
    std::string note = "asymptotic quantile tables";
    try {
        classify_deterministic_case(spec.deterministic, frame.first_year());
    } catch (const Error& e) {
        if (e.code() != ErrorCode::UseBootstrap) throw;
        method = TraceMethod::Bootstrap;
        note = "parametric bootstrap (no standard table for broken deterministics)";
    }
    if (cfg.bootstrap > 0) {
        method = TraceMethod::Bootstrap;
        note = "parametric bootstrap";
    }
    const int b = cfg.bootstrap > 0 ? cfg.bootstrap : 399;
    const TraceResult tr = trace_test(frame, spec, method, b, cfg.seed, cfg.threads);

    auto out = open_output(cfg, "ranktest.txt", hash);
    out << "# trace test for cointegration rank; p-values via " << note << "\n";
    out << "r0,eigenvalue,statistic,pvalue,cv90,cv95,cv99\n";
    out << "# units: statistic is -T sum log(1-lambda); p-values in [0,1]\n";
    for (const auto& row : tr.rows) {
        out << row.r0 << "," << format_double(tr.eigenvalues(row.r0)) << ","
            << format_double(row.statistic) << "," << format_double(row.pvalue) << ","
            << format_double(row.cv90) << "," << format_double(row.cv95) << ","
            << format_double(row.cv99) << "\n";
    }
    out << "selected rank at 5% level: " << tr.selected_rank(0.05) << "\n";
    if (tr.exogenous_flagged)
        out << "note: exogenous regressors present; no partial-system correction\n";
}

void cmd_stability(const RunConfig& cfg) {
    InputHash hash;
    const TimeFrame frame = load_data(cfg, hash);
    CvarSpec spec = load_spec(cfg, hash);
    if (!spec.rank_fixed()) spec.rank = resolve_rank(frame, spec, cfg, nullptr);

    CvarEstimate est = fit(frame, spec);
    if (!cfg.restrictions_path.empty()) {
        hash.add(cfg.restrictions_path);
        const RestrictionSet set =
            parse_restrictions(KvFile::parse_file(cfg.restrictions_path), est.endo_names,
                               spec.deterministic, spec.rank);
        est = estimate_restricted(frame, spec, set).estimate;
    }

    NyblomOptions opt;
    if (cfg.bootstrap > 0) opt.bootstrap = cfg.bootstrap;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    const NyblomResult res = nyblom_sequence(frame, spec, est, opt);

    auto out = open_output(cfg, "stability.txt", hash);
    out << "# cointegration parameter constancy: fluctuation statistic path\n";
    out << "year,L\n";
    out << "# units: L is the scaled score fluctuation; reference is the 95% level\n";
    for (Eigen::Index i = 0; i < res.path.size(); ++i)
        out << res.years[static_cast<std::size_t>(i)] << "," << format_double(res.path(i))
            << "\n";
    out << "sup = " << format_double(res.sup_stat) << ", reference95 = "
        << format_double(res.reference95)
        << (res.reference_bootstrapped ? " (bootstrap)" : " (supplied)") << ", "
        << (res.exceeds ? "REJECT constancy" : "constancy not rejected") << "\n";
}

void cmd_control(const RunConfig& cfg) {
    InputHash hash;
    TimeFrame frame_storage;
    const TimeFrame* frame = nullptr;
    const CvarEstimate est = load_or_fit_estimate(cfg, hash, &frame, frame_storage);
    const LongRunRep rep = compute_C(est);

    std::optional<Eigen::MatrixXd> tstats;
    if (cfg.bootstrap > 0) {
        if (!frame)
            throw Error(ErrorCode::InvalidArgument,
                        "bootstrap t-statistics need the data file (--data)");
        tstats = bootstrap_c_tstats(est, *frame, cfg.bootstrap, cfg.seed, cfg.threads);
    }

    const PolicyConfig pc = load_policy_config(cfg, hash);
    const Eigen::MatrixXd a_sel = selection_matrix(pc.a_cols, est.endo_names);
    const Eigen::MatrixXd b_sel = selection_matrix(pc.b_cols, est.endo_names);
    const ControllabilityResult check =
        controllability_test(rep, a_sel, b_sel, tstats ? &*tstats : nullptr);

    auto out = open_output(cfg, "control_report.txt", hash);
    out << "# controllability test and control rule\n";
    out << "# units: determinant in product scale of (b, C, a); t-statistics unitless\n";
    out << "det(b'Ca) = " << format_double(check.determinant) << "\n";
    out << "normalized det = " << format_double(check.normalized_determinant) << "\n";
    out << "decision: " << (check.controllable ? "controllable" : "not controllable")
        << (check.weak ? " (weak)" : "") << "\n";
    for (const auto& e : check.entries)
        out << "  t[C(" << e.target_row << "," << e.control_col << ")] = "
            << format_double(e.tstat) << (e.rejects_zero ? " rejects 0" : " does not reject 0")
            << "\n";
    if (!check.controllable) {
        out << "no rule built: the controllability test fails at this level\n";
        out.close();
        throw Error(ErrorCode::NotControllable,
                    "not controllable: det(b'Ca)=" + format_double(check.determinant) +
                        (tstats ? " or the relevant impact entries do not reject zero"
                                : ""));
    }
    const ControlPolicy policy = policy_from_config(pc, cfg, est, rep, frame);
    const AugmentedSystem aug = augment_system(est, policy);
    out << "kappa':\n";
    for (Eigen::Index j = 0; j < policy.kappa.cols(); ++j) {
        out << "  ";
        for (Eigen::Index i = 0; i < policy.kappa.rows(); ++i)
            out << format_double(policy.kappa(i, j)) << " ";
        out << "\n";
    }
    out << "kappa0:";
    for (Eigen::Index i = 0; i < policy.kappa0.size(); ++i)
        out << " " << format_double(policy.kappa0(i));
    out << "\n";
    out << "unit roots: " << aug.unit_roots_before << " -> " << aug.unit_roots_after
        << "\n";
    out << "MA block spectral radius = " << format_double(aug.ma_spectral_radius) << "\n";
    out << "phase-in: start " << policy.phase_in.start_year << ", ramp "
        << policy.phase_in.ramp_years << " years (linear)\n";
    out << "objective b*:";
    for (Eigen::Index i = 0; i < policy.b_star_requested.size(); ++i)
        out << " " << format_double(policy.b_star_requested(i));
    if ((policy.b_star - policy.b_star_requested).cwiseAbs().maxCoeff() > 1e-12) {
        out << " (rule re-targeted to";
        for (Eigen::Index i = 0; i < policy.b_star.size(); ++i)
            out << " " << format_double(policy.b_star(i));
        out << " against deterministic drift)";
    }
    out << "\n";

    out << "\nlong-run impact matrix C";
    if (tstats) out << " [t-statistics in brackets]";
    out << ":\n";
    for (int i = 0; i < est.n; ++i) {
        out << "  " << est.endo_names[i] << ":";
        for (int j = 0; j < est.n; ++j) {
            out << " " << format_double(rep.c(i, j));
            if (tstats) out << " [" << format_double((*tstats)(i, j)) << "]";
        }
        out << "\n";
    }

    // Headline indicators when the canonical variables are all present.
    const auto& names = est.endo_names;
    const bool canonical =
        std::count(names.begin(), names.end(), "y") &&
        std::count(names.begin(), names.end(), "c") &&
        std::count(names.begin(), names.end(), "m") &&
        std::count(names.begin(), names.end(), "h");
    if (canonical && est.r >= 2 && frame) {
        IndicatorOptions iopt;
        if (cfg.bootstrap > 0) {
            iopt.bootstrap = cfg.bootstrap;
            iopt.seed = cfg.seed;
            iopt.threads = cfg.threads;
        }
        try {
            const DerivedIndicators ind = derived_indicators(est, rep, *frame, iopt);
            out << "\nindicators (temperature damage xi; warming per CO2 doubling "
                   "window; GDP loss per GtC):\n";
            out << "  xi = " << format_double(ind.temperature_damage) << " (se "
                << format_double(ind.temperature_damage_se) << ")\n";
            out << "  dT = " << format_double(ind.warming_due_to_co2) << " (se "
                << format_double(ind.warming_due_to_co2_se) << ")\n";
            out << "  gamma = " << format_double(ind.gdp_loss_per_gtc) << " (se "
                << format_double(ind.gdp_loss_per_gtc_se) << ")\n";
            out << "  C[y,m] = " << format_double(ind.c_ym)
                << ", per unit long-run m move = " << format_double(ind.c_ym_per_unit_m)
                << "\n";
        } catch (const Error&) {
            out << "\nindicators: not available for this estimate\n";
        }
    }
    {
        // Machine-readable C dump next to the report.
        const std::string p = output_path(cfg, "longrun.txt", true);
        std::ofstream mout(p);
        mout << "# config " << hash.hex() << "  seed " << cfg.seed << "\n";
        mout << "format = cvar-longrun/1\n";
        mout << "names = ";
        for (std::size_t i = 0; i < names.size(); ++i)
            mout << (i ? ", " : "") << names[i];
        mout << "\n";
        mout << "matrix C " << est.n << " " << est.n << "\n";
        for (int i = 0; i < est.n; ++i) {
            for (int j = 0; j < est.n; ++j)
                mout << (j ? " " : "") << format_double(rep.c(i, j));
            mout << "\n";
        }
        mout << "endmatrix\n";
        if (tstats) {
            mout << "matrix C_tstats " << est.n << " " << est.n << "\n";
            for (int i = 0; i < est.n; ++i) {
                for (int j = 0; j < est.n; ++j)
                    mout << (j ? " " : "") << format_double((*tstats)(i, j));
                mout << "\n";
            }
            mout << "endmatrix\n";
        }
    }
}

void cmd_simulate(const RunConfig& cfg) {
    InputHash hash;
    TimeFrame frame_storage;
    const TimeFrame* frame = nullptr;
    const CvarEstimate est = load_or_fit_estimate(cfg, hash, &frame, frame_storage);
    if (!frame)
        throw Error(ErrorCode::InvalidArgument, "simulate needs the data file (--data)");
    const LongRunRep rep = compute_C(est);

    if (cfg.scenario_path.empty())
        throw Error(ErrorCode::InvalidArgument, "no scenario file given (--scenario)");
    hash.add(cfg.scenario_path);
    const KvFile sc = KvFile::parse_file(cfg.scenario_path);

    RunConfig pcfg = cfg;
    if (pcfg.policy_path.empty()) pcfg.policy_path = sc.get_string_or("policy", "");
    const ControlPolicy policy =
        policy_from_config(load_policy_config(pcfg, hash), pcfg, est, rep, frame);

    const int horizon = static_cast<int>(sc.get_int_or("horizon", 0));
    const int reference_year =
        static_cast<int>(sc.get_int_or("reference_year", frame->last_year()));
    const auto log_vars = sc.get_list("log_vars");

    BandOptions bands_opt;
    bands_opt.replications =
        cfg.bootstrap > 0 ? cfg.bootstrap : static_cast<int>(sc.get_int_or("bootstrap", 500));
    bands_opt.seed = cfg.seed;
    bands_opt.residual_from = static_cast<int>(sc.get_int_or("residual_from", 0));
    bands_opt.residual_to = static_cast<int>(sc.get_int_or("residual_to", 0));
    bands_opt.lower_q = sc.get_double_or("lower_q", 0.05);
    bands_opt.upper_q = sc.get_double_or("upper_q", 0.95);
    bands_opt.threads = cfg.threads;

    const SimulationPath path = replay_counterfactual(est, &policy, *frame);
    const BootstrapBands bands = bootstrap_bands(est, &policy, *frame, bands_opt);

    // Path table: observed, counterfactual, band bounds per variable.
    const auto endo_cols = frame->columns_with_role(Role::Endogenous);
    const Eigen::MatrixXd observed = frame->dense_block(endo_cols);
    PathTable table;
    table.years = frame->years();
    for (const auto& name : est.endo_names) {
        table.columns.push_back("obs_" + name);
        table.columns.push_back("cf_" + name);
        table.columns.push_back("lo_" + name);
        table.columns.push_back("hi_" + name);
    }
    table.values = Eigen::MatrixXd(frame->t(), 4 * est.n);
    for (int j = 0; j < est.n; ++j) {
        table.values.col(4 * j + 0) = observed.col(j);
        table.values.col(4 * j + 1) = path.levels.col(j);
        table.values.col(4 * j + 2) = bands.lower.col(j);
        table.values.col(4 * j + 3) = bands.upper.col(j);
    }
    {
        const std::string p = output_path(cfg, "counterfactual.csv", true);
        write_path_table(table, p,
                         "config " + hash.hex() + "  seed " + std::to_string(cfg.seed) +
                             "  counterfactual with " +
                             std::to_string(bands_opt.replications) + " bootstrap paths",
                         "levels as in the input data (log scale where ingested in logs)",
                         cfg.delimiter);
    }

    if (horizon > 0) {
        BandOptions fopt = bands_opt;
        ForecastResult unconditional = forecast(est, *frame, horizon, nullptr, fopt);
        BandOptions fopt2 = bands_opt;
        ForecastResult with_policy = forecast(est, *frame, horizon, &policy, fopt2);
        PathTable ft;
        ft.years = unconditional.bands.years;
        for (const auto& name : est.endo_names) {
            ft.columns.push_back("fc_" + name);
            ft.columns.push_back("fc_lo_" + name);
            ft.columns.push_back("fc_hi_" + name);
            ft.columns.push_back("pol_" + name);
        }
        ft.values = Eigen::MatrixXd(horizon, 4 * est.n);
        const int t_obs = frame->t();
        for (int j = 0; j < est.n; ++j) {
            ft.values.col(4 * j + 0) =
                unconditional.point.levels.col(j).tail(horizon);
            ft.values.col(4 * j + 1) = unconditional.bands.lower.col(j);
            ft.values.col(4 * j + 2) = unconditional.bands.upper.col(j);
            ft.values.col(4 * j + 3) = with_policy.point.levels.col(j).tail(horizon);
        }
        (void)t_obs;
        const std::string p = output_path(cfg, "forecast.csv", true);
        write_path_table(ft, p,
                         "config " + hash.hex() + "  seed " + std::to_string(cfg.seed) +
                             "  forecast horizon " + std::to_string(horizon),
                         "levels as in the input data", cfg.delimiter);
    }

    const CostReport report = cost_report(*frame, path, reference_year, log_vars);
    auto out = open_output(cfg, "cost_report.txt", hash);
    out << "# policy cost at reference year " << report.reference_year << "\n";
    out << "variable,percent_change,level_change,equivalent_year\n";
    out << "# units: percent for log variables, level difference otherwise\n";
    for (std::size_t i = 0; i < report.variables.size(); ++i) {
        out << report.variables[i] << ",";
        if (report.is_log[i])
            out << format_double(report.percent_change[i]);
        out << "," << format_double(report.level_change[i]) << ",";
        if (std::isnan(report.equivalent_year[i]))
            out << "none";
        else
            out << format_double(report.equivalent_year[i]);
        out << "\n";
    }
    out << "residual window: " << (bands_opt.warned_short_window ? "short (<30 rows)" : "ok")
        << "\n";

    if (cfg.svg) {
        for (int j = 0; j < est.n; ++j) {
            const std::string p =
                output_path(cfg, "counterfactual_" + est.endo_names[j] + ".svg", true);
            write_band_svg(p, est.endo_names[j] + ": observed vs counterfactual",
                           frame->years(), observed.col(j), path.levels.col(j),
                           bands.lower.col(j), bands.upper.col(j));
        }
    }
}

}  // namespace cvar
