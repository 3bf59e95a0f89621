#include "cvar/artifacts.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cvar/errors.hpp"

namespace cvar {

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, p);
}

CvarSpec parse_model_spec(const KvFile& kv) {
    CvarSpec spec;
    spec.lag_order = static_cast<int>(kv.get_int_or("lag_order", 1));
    if (kv.has("rank")) {
        const std::string r = kv.get_string("rank");
        spec.rank = r == "search" ? -1 : static_cast<int>(kv.get_int("rank"));
    }
    spec.deterministic.constant = kv.get_bool_or("constant", false);
    spec.deterministic.step_dummies = kv.get_int_list_or("step_dummy");
    spec.deterministic.restricted_constant = kv.get_bool_or("restricted_constant", false);
    spec.deterministic.restricted_trends = kv.get_int_list_or("broken_trend");
    spec.exogenous = kv.get_list("exog");
    spec.exog_lag = static_cast<int>(kv.get_int_or("exog_lag", 1));
    spec.normalize_on = kv.get_list("normalize");
    if (spec.deterministic.restricted_constant && spec.deterministic.constant)
        throw Error(ErrorCode::InvalidArgument,
                    "restricted_constant and constant cannot both be set");
    return spec;
}

namespace {

std::vector<std::string> beta_row_labels(const std::vector<std::string>& endo,
                                         const DeterministicSpec& det) {
    std::vector<std::string> labels = endo;
    for (const auto& l : det.restricted_labels()) labels.push_back(l);
    return labels;
}

int label_index(const std::vector<std::string>& labels, const std::string& name,
                const std::string& context) {
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end())
        throw Error(ErrorCode::UnknownColumn,
                    context + ": unknown coefficient name '" + name + "'");
    return static_cast<int>(it - labels.begin());
}

}  // namespace

RestrictionSet parse_restrictions(const KvFile& kv, const std::vector<std::string>& endo,
                                  const DeterministicSpec& det, int rank) {
    const auto labels = beta_row_labels(endo, det);
    const int p1 = static_cast<int>(labels.size());
    const int n = static_cast<int>(endo.size());

    RestrictionSet set;
    set.beta.resize(rank);
    bool any_beta = false;
    bool any_alpha = false;
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> alpha_free =
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, rank, true);

    for (const auto& e : kv.entries()) {
        std::stringstream key(e.key);
        std::string kind;
        int j = 0;
        key >> kind >> j;
        if (kind != "beta" && kind != "alpha" && kind != "beta_H") continue;
        if (kind == "beta" && e.key == "beta") j = 1;  // bare key for r = 1
        if (kind == "alpha" && e.key == "alpha") j = 1;
        if (j < 1 || j > rank)
            throw Error(ErrorCode::InvalidArgument,
                        "restriction '" + e.key + "': vector index out of range");

        if (kind == "beta_H") {
            set.beta[j - 1].h = e.is_matrix_block ? e.matrix : parse_matrix_literal(e.value);
            any_beta = true;
            continue;
        }

        // Pattern row: fixed value, 0, or free per coefficient.
        std::vector<std::pair<std::string, std::string>> items;
        std::stringstream ss(e.value);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw Error(ErrorCode::InvalidArgument,
                            e.key + ": expected name:spec entries");
            auto strip = [](std::string s) {
                const auto b = s.find_first_not_of(" \t");
                const auto t = s.find_last_not_of(" \t");
                return b == std::string::npos ? std::string() : s.substr(b, t - b + 1);
            };
            items.emplace_back(strip(tok.substr(0, colon)), strip(tok.substr(colon + 1)));
        }

        if (kind == "alpha") {
            any_alpha = true;
            for (const auto& [name, v] : items) {
                const int row = label_index(endo, name, e.key);
                if (v == "0")
                    alpha_free(row, j - 1) = false;
                else if (v != "free")
                    throw Error(ErrorCode::InvalidArgument,
                                e.key + ": alpha entries are 'free' or '0'");
            }
            continue;
        }

        // beta pattern -> H with unit columns for free/fixed-nonzero entries;
        // a fixed nonzero entry also pins the normalization.
        any_beta = true;
        std::vector<int> active;
        int norm_row = -1;
        double norm_value = 1.0;
        for (const auto& [name, v] : items) {
            const int row = label_index(labels, name, e.key);
            if (v == "0") continue;
            if (v == "free") {
                active.push_back(row);
            } else {
                const double value = std::stod(v);
                if (value == 0.0) continue;
                active.push_back(row);
                if (norm_row < 0) {
                    norm_row = row;
                    norm_value = value;
                }
            }
        }
        if (active.empty())
            throw Error(ErrorCode::InfeasibleRestrictions,
                        e.key + ": every coefficient is restricted to zero");
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(p1, static_cast<Eigen::Index>(active.size()));
        for (std::size_t c = 0; c < active.size(); ++c) h(active[c], c) = 1.0;
        set.beta[j - 1].h = h;
        set.beta[j - 1].normalize_row = norm_row;
        set.beta[j - 1].normalize_value = norm_value;
    }

    if (!any_beta) set.beta.clear();
    if (any_alpha) set.alpha_free = alpha_free;
    return set;
}

PolicyConfig parse_policy_config(const KvFile& kv) {
    PolicyConfig cfg;
    for (const auto& e : kv.entries()) {
        std::stringstream key(e.key);
        std::string kind;
        int j = 0;
        key >> kind >> j;
        if (kind != "a" && kind != "b") continue;
        if (e.key == "a" || e.key == "b") j = 1;
        auto& target = kind == "a" ? cfg.a_cols : cfg.b_cols;
        if (j < 1) throw Error(ErrorCode::InvalidArgument, "bad policy column '" + e.key + "'");
        if (static_cast<int>(target.size()) < j) target.resize(j);
        target[j - 1] = KvFile::parse_text(e.key + " = " + e.value).get_weights(e.key);
    }
    const auto b_star = kv.get_list("b_star");
    cfg.b_star = Eigen::VectorXd(static_cast<Eigen::Index>(b_star.size()));
    for (std::size_t i = 0; i < b_star.size(); ++i) cfg.b_star(i) = std::stod(b_star[i]);
    cfg.phase_in.start_year = static_cast<int>(kv.get_int("start"));
    cfg.phase_in.ramp_years = static_cast<int>(kv.get_int_or("ramp", 10));
    cfg.calibrate = kv.get_bool_or("calibrate", false);
    if (cfg.phase_in.ramp_years < 1)
        throw Error(ErrorCode::InvalidArgument, "ramp must be >= 1 year");
    if (cfg.a_cols.empty() || cfg.b_cols.empty())
        throw Error(ErrorCode::InvalidArgument, "policy needs both a and b selections");
    return cfg;
}

Eigen::MatrixXd selection_matrix(
    const std::vector<std::vector<std::pair<std::string, double>>>& cols,
    const std::vector<std::string>& names) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(names.size()),
                                              static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [name, w] : cols[j])
            m(label_index(names, name, "policy selection"), static_cast<Eigen::Index>(j)) = w;
    return m;
}

// --- estimate artifact ---------------------------------------------------------

namespace {

void write_matrix_block(std::ostream& out, const std::string& name,
                        const Eigen::MatrixXd& m) {
    out << "matrix " << name << " " << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << format_double(m(i, j));
        out << "\n";
    }
    out << "endmatrix\n";
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? ", " : "") + items[i];
    return out;
}

std::string join_ints(const std::vector<int>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? ", " : "") + std::to_string(items[i]);
    return out;
}

}  // namespace

void write_estimate(const CvarEstimate& est, const std::string& path,
                    const std::string& config_hash, std::uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    out << "format = cvar-estimate/1\n";
    out << "config = " << config_hash << "\n";
    out << "seed = " << seed << "\n";
    out << "names = " << join(est.endo_names) << "\n";
    out << "n = " << est.n << "\n";
    out << "rank = " << est.r << "\n";
    out << "lag_order = " << est.k << "\n";
    out << "first_year = " << est.first_year << "\n";
    out << "t0 = " << est.t0 << "\n";
    out << "t_eff = " << est.t_eff << "\n";
    out << "constant = " << (est.spec.deterministic.constant ? "true" : "false") << "\n";
    out << "step_dummy = " << join_ints(est.spec.deterministic.step_dummies) << "\n";
    out << "restricted_constant = "
        << (est.spec.deterministic.restricted_constant ? "true" : "false") << "\n";
    out << "broken_trend = " << join_ints(est.spec.deterministic.restricted_trends) << "\n";
    out << "exog = " << join(est.spec.exogenous) << "\n";
    out << "exog_lag = " << est.spec.exog_lag << "\n";
    out << "frame_det = " << join(est.frame_det_names) << "\n";
    out << "loglik = " << format_double(est.loglik) << "\n";
    write_matrix_block(out, "alpha", est.alpha);
    write_matrix_block(out, "beta_star", est.beta_star);
    for (std::size_t i = 0; i < est.gammas.size(); ++i)
        write_matrix_block(out, "gamma_" + std::to_string(i + 1), est.gammas[i]);
    write_matrix_block(out, "det_coef", est.det_coef);
    write_matrix_block(out, "exog_coef", est.exog_coef);
    write_matrix_block(out, "frame_det_coef", est.frame_det_coef);
    write_matrix_block(out, "omega", est.omega);
    write_matrix_block(out, "residuals", est.residuals);
    Eigen::MatrixXd ev = est.eigenvalues;
    write_matrix_block(out, "eigenvalues", ev);
}

CvarEstimate read_estimate(const std::string& path) {
    const KvFile kv = KvFile::parse_file(path);
    if (kv.get_string_or("format", "") != "cvar-estimate/1")
        throw Error(ErrorCode::Io, path + ": not a cvar-estimate/1 artifact");

    CvarEstimate est;
    est.endo_names = kv.get_list("names");
    est.n = static_cast<int>(kv.get_int("n"));
    est.r = static_cast<int>(kv.get_int("rank"));
    est.k = static_cast<int>(kv.get_int("lag_order"));
    est.first_year = static_cast<int>(kv.get_int("first_year"));
    est.t0 = static_cast<int>(kv.get_int("t0"));
    est.t_eff = static_cast<int>(kv.get_int("t_eff"));
    est.spec.lag_order = est.k;
    est.spec.rank = est.r;
    est.spec.deterministic.constant = kv.get_bool_or("constant", false);
    est.spec.deterministic.step_dummies = kv.get_int_list_or("step_dummy");
    est.spec.deterministic.restricted_constant =
        kv.get_bool_or("restricted_constant", false);
    est.spec.deterministic.restricted_trends = kv.get_int_list_or("broken_trend");
    est.spec.exogenous = kv.get_list("exog");
    est.spec.exog_lag = static_cast<int>(kv.get_int_or("exog_lag", 1));
    est.frame_det_names = kv.get_list("frame_det");
    est.loglik = kv.get_double("loglik");
    est.alpha = kv.get_matrix("alpha");
    est.beta_star = kv.get_matrix("beta_star");
    for (int i = 1; i <= est.k - 1; ++i)
        est.gammas.push_back(kv.get_matrix("gamma_" + std::to_string(i)));
    est.det_coef = kv.get_matrix("det_coef");
    est.exog_coef = kv.get_matrix("exog_coef");
    est.frame_det_coef = kv.get_matrix("frame_det_coef");
    est.omega = kv.get_matrix("omega");
    est.residuals = kv.get_matrix("residuals");
    est.eigenvalues = kv.get_matrix("eigenvalues");
    est.years.resize(est.t_eff);
    for (int i = 0; i < est.t_eff; ++i) est.years[i] = est.first_year + est.t0 + i;
    return est;
}

void write_path_table(const PathTable& table, const std::string& path,
                      const std::string& header_comment, const std::string& units_line,
                      char delimiter) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    out << "# " << header_comment << "\n";
    out << "year";
    for (const auto& c : table.columns) out << delimiter << c;
    out << "\n";
    out << "# units: " << units_line << "\n";
    for (std::size_t i = 0; i < table.years.size(); ++i) {
        out << table.years[i];
        for (Eigen::Index j = 0; j < table.values.cols(); ++j)
            out << delimiter << format_double(table.values(static_cast<Eigen::Index>(i), j));
        out << "\n";
    }
}

void write_band_svg(const std::string& path, const std::string& title,
                    const std::vector<int>& years, const Eigen::VectorXd& observed,
                    const Eigen::VectorXd& central, const Eigen::VectorXd& lower,
                    const Eigen::VectorXd& upper) {
    const int w = 860, h = 420, ml = 60, mr = 20, mt = 30, mb = 40;
    const auto t = static_cast<Eigen::Index>(years.size());
    if (t < 2) throw Error(ErrorCode::InvalidArgument, "svg: need at least two points");

    double lo = observed.minCoeff(), hi = observed.maxCoeff();
    for (const auto* v : {&central, &lower, &upper}) {
        if (v->size() == 0) continue;
        lo = std::min(lo, v->minCoeff());
        hi = std::max(hi, v->maxCoeff());
    }
    if (hi <= lo) hi = lo + 1.0;
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    auto sx = [&](Eigen::Index i) {
        return ml + (w - ml - mr) * static_cast<double>(i) / static_cast<double>(t - 1);
    };
    auto sy = [&](double v) { return mt + (h - mt - mb) * (hi - v) / (hi - lo); };
    auto polyline = [&](const Eigen::VectorXd& v) {
        std::string pts;
        for (Eigen::Index i = 0; i < t; ++i) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(i), sy(v(i)));
            pts += buf;
        }
        return pts;
    };

    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h
        << "' viewBox='0 0 " << w << " " << h << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << ml << "' y='18' font-family='sans-serif' font-size='13'>" << title
        << "</text>\n";
    if (lower.size() == t && upper.size() == t) {
        std::string band;
        for (Eigen::Index i = 0; i < t; ++i) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(i), sy(upper(i)));
            band += buf;
        }
        for (Eigen::Index i = t - 1; i >= 0; --i) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(i), sy(lower(i)));
            band += buf;
        }
        out << "<polygon points='" << band << "' fill='#9ecae1' fill-opacity='0.45' "
               "stroke='none'/>\n";
    }
    out << "<polyline points='" << polyline(observed)
        << "' fill='none' stroke='#333333' stroke-width='1.4'/>\n";
    if (central.size() == t)
        out << "<polyline points='" << polyline(central)
            << "' fill='none' stroke='#d62728' stroke-width='1.4' stroke-dasharray='5,3'/>\n";
    // Axis labels: first/last year and value range.
    out << "<text x='" << ml << "' y='" << h - 12
        << "' font-family='sans-serif' font-size='11'>" << years.front() << "</text>\n";
    out << "<text x='" << w - mr - 34 << "' y='" << h - 12
        << "' font-family='sans-serif' font-size='11'>" << years.back() << "</text>\n";
    out << "<text x='6' y='" << sy(hi - pad) + 4
        << "' font-family='sans-serif' font-size='11'>" << format_double(hi - pad)
        << "</text>\n";
    out << "<text x='6' y='" << sy(lo + pad) + 4
        << "' font-family='sans-serif' font-size='11'>" << format_double(lo + pad)
        << "</text>\n";
    out << "</svg>\n";
}

}  // namespace cvar
