#include "cvar/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "cvar/errors.hpp"
#include "cvar/linalg.hpp"

namespace cvar {

Eigen::VectorXd CvarEstimate::mu_at(int year) const {
    const int qr = q_restricted();
    if (qr == 0) return Eigen::VectorXd::Zero(r);
    const Eigen::VectorXd dr =
        restricted_deterministic_row(spec.deterministic, year, first_year);
    return -delta().transpose() * dr;
}

Concentrated concentrate(const TimeFrame& frame, const CvarSpec& spec) {
    if (spec.lag_order < 1)
        throw Error(ErrorCode::InvalidArgument, "lag_order must be >= 1");
    frame.require_prepared();

    const auto endo_cols = frame.columns_with_role(Role::Endogenous);
    if (endo_cols.empty())
        throw Error(ErrorCode::InvalidArgument, "no endogenous columns in frame");
    const int n = static_cast<int>(endo_cols.size());
    const int k = spec.lag_order;
    const int big_t = frame.t();

    std::vector<int> exog_cols;
    for (const auto& name : spec.exogenous) {
        const int c = frame.column(name);
        if (frame.roles()[c] != Role::Exogenous)
            throw Error(ErrorCode::InvalidArgument,
                        "column '" + name + "' is not tagged exogenous");
        exog_cols.push_back(c);
    }
    const auto det_cols = frame.columns_with_role(Role::Deterministic);
    const int n_exog = static_cast<int>(exog_cols.size());

    // First usable equation row: k initial conditions, plus enough history
    // for the lagged exogenous difference.
    const int t0 = std::max(k, n_exog > 0 ? spec.exog_lag + 1 : 0);
    const int t_eff = big_t - t0;

    const auto det = build_deterministics(spec.deterministic, frame.years());
    const int q_u = spec.deterministic.n_unrestricted();
    const int q_r = spec.deterministic.n_restricted();
    const int q_z2 = n * (k - 1) + q_u + n_exog + static_cast<int>(det_cols.size());
    if (t_eff <= std::max(q_z2, n + q_r) || t_eff <= n * k + q_u + q_r)
        throw Error(ErrorCode::InsufficientObservations,
                    "effective sample of " + std::to_string(t_eff) +
                        " too short for the specification");

    const Eigen::MatrixXd x = frame.dense_block(endo_cols);
    Eigen::MatrixXd dx(big_t - 1, n);
    for (int t = 1; t < big_t; ++t) dx.row(t - 1) = x.row(t) - x.row(t - 1);

    Eigen::MatrixXd exog;
    if (n_exog > 0) exog = frame.dense_block(exog_cols);

    Concentrated out;
    out.n = n;
    out.t0 = t0;
    out.endo_names = frame.names_with_role(Role::Endogenous);
    out.frame_det_names = frame.names_with_role(Role::Deterministic);
    out.z0 = Eigen::MatrixXd(t_eff, n);
    out.z1 = Eigen::MatrixXd(t_eff, n + q_r);
    out.z2 = Eigen::MatrixXd(t_eff, q_z2);
    out.years.resize(t_eff);

    for (int i = 0; i < t_eff; ++i) {
        const int t = t0 + i;  // equation time index
        out.years[i] = frame.years()[t];
        out.z0.row(i) = dx.row(t - 1);  // dX_t
        out.z1.row(i).head(n) = x.row(t - 1);
        if (q_r > 0) out.z1.row(i).tail(q_r) = det.restricted.row(t);
        Eigen::Index c = 0;
        for (int lag = 1; lag <= k - 1; ++lag) {
            out.z2.row(i).segment(c, n) = dx.row(t - 1 - lag);  // dX_{t-lag}
            c += n;
        }
        if (q_u > 0) {
            out.z2.row(i).segment(c, q_u) = det.unrestricted.row(t);
            c += q_u;
        }
        for (int e = 0; e < n_exog; ++e) {
            const int s = t - spec.exog_lag;
            out.z2(i, c++) = exog(s, e) - exog(s - 1, e);
        }
        for (std::size_t d = 0; d < det_cols.size(); ++d)
            out.z2(i, c++) = frame.values()(t, det_cols[d]);
    }

    out.r0 = ols_residuals(out.z0, out.z2);
    out.r1 = ols_residuals(out.z1, out.z2);
    return out;
}

RrrSolution rrr_solve(const Eigen::MatrixXd& r0, const Eigen::MatrixXd& r1) {
    if (r0.rows() != r1.rows() || r0.rows() == 0)
        throw Error(ErrorCode::InvalidArgument, "rrr_solve: residual blocks disagree");
    const double t_eff = static_cast<double>(r0.rows());
    RrrSolution out;
    out.t_eff = static_cast<int>(r0.rows());
    out.s00 = r0.transpose() * r0 / t_eff;
    out.s01 = r0.transpose() * r1 / t_eff;
    out.s11 = r1.transpose() * r1 / t_eff;

    const GeneralizedEig eig = solve_rrr_eigensystem(out.s00, out.s01, out.s11);
    out.eigenvalues = eig.values;
    out.vectors = eig.vectors;

    for (Eigen::Index i = 0; i < out.eigenvalues.size(); ++i) {
        const double l = out.eigenvalues(i);
        if (l < 0.0 || l >= 1.0 - 1e-12)
            throw Error(ErrorCode::DegenerateCorrelation,
                        "squared canonical correlation " + std::to_string(l) +
                            " outside [0,1)");
    }
    for (Eigen::Index i = 1; i < out.eigenvalues.size(); ++i)
        if (out.eigenvalues(i) > out.eigenvalues(i - 1) + 1e-12)
            throw Error(ErrorCode::DegenerateCorrelation, "eigenvalues not sorted");
    return out;
}

double gaussian_loglik(int t_eff, const Eigen::MatrixXd& omega) {
    const double n = static_cast<double>(omega.rows());
    Eigen::LLT<Eigen::MatrixXd> llt(omega);
    if (llt.info() != Eigen::Success)
        throw Error(ErrorCode::NonPositiveDefinite, "residual covariance not PD");
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < omega.rows(); ++i)
        logdet += 2.0 * std::log(llt.matrixL()(i, i));
    return -0.5 * t_eff * (n * std::log(2.0 * M_PI) + logdet + n);
}

CvarEstimate assemble_estimate(const TimeFrame& frame, const CvarSpec& spec,
                               const Concentrated& conc, const Eigen::MatrixXd& alpha,
                               const Eigen::MatrixXd& beta_star,
                               const Eigen::VectorXd& eigenvalues) {
    const int n = conc.n;
    const int k = spec.lag_order;
    const int q_u = spec.deterministic.n_unrestricted();
    const int n_exog = static_cast<int>(spec.exogenous.size());
    const auto det_cols = frame.columns_with_role(Role::Deterministic);

    CvarEstimate est;
    est.spec = spec;
    est.endo_names = conc.endo_names;
    est.n = n;
    est.r = static_cast<int>(alpha.cols());
    est.k = k;
    est.t0 = conc.t0;
    est.t_eff = static_cast<int>(conc.z0.rows());
    est.first_year = frame.first_year();
    est.years = conc.years;
    est.alpha = alpha;
    est.beta_star = beta_star;
    est.eigenvalues = eigenvalues;

    // Short-run block by OLS of (dX_t - Pi* Z1_t) on Z2.
    const Eigen::MatrixXd ec_part = conc.z1 * beta_star * alpha.transpose();
    Eigen::MatrixXd psi;  // q_z2 x n
    if (conc.z2.cols() > 0) {
        psi = ols_coefficients(conc.z0 - ec_part, conc.z2);
    } else {
        psi = Eigen::MatrixXd::Zero(0, n);
    }
    est.residuals = conc.z0 - ec_part;
    if (conc.z2.cols() > 0) est.residuals -= conc.z2 * psi;

    Eigen::Index c = 0;
    est.gammas.clear();
    for (int lag = 1; lag <= k - 1; ++lag) {
        est.gammas.push_back(psi.middleRows(c, n).transpose());
        c += n;
    }
    est.det_coef = Eigen::MatrixXd(n, q_u);
    if (q_u > 0) {
        est.det_coef = psi.middleRows(c, q_u).transpose();
        c += q_u;
    }
    est.exog_coef = Eigen::MatrixXd(n, n_exog);
    if (n_exog > 0) {
        est.exog_coef = psi.middleRows(c, n_exog).transpose();
        c += n_exog;
    }
    est.frame_det_names = conc.frame_det_names;
    est.frame_det_coef = Eigen::MatrixXd(n, static_cast<Eigen::Index>(det_cols.size()));
    if (!det_cols.empty())
        est.frame_det_coef =
            psi.middleRows(c, static_cast<Eigen::Index>(det_cols.size())).transpose();

    est.omega = est.residuals.transpose() * est.residuals /
                static_cast<double>(est.t_eff);
    est.loglik = gaussian_loglik(est.t_eff, est.omega);
    return est;
}

CvarEstimate fit(const TimeFrame& frame, const CvarSpec& spec) {
    if (!spec.rank_fixed())
        throw Error(ErrorCode::InvalidArgument,
                    "fit requires a fixed rank; run the trace test first");
    const Concentrated conc = concentrate(frame, spec);
    const int n = conc.n;
    const int p1 = static_cast<int>(conc.z1.cols());
    const int r = spec.rank;
    if (r > n) throw Error(ErrorCode::InvalidArgument, "rank exceeds dimension");

    const RrrSolution rrr = rrr_solve(conc.r0, conc.r1);

    Eigen::MatrixXd beta_star = rrr.vectors.leftCols(r);

    // Normalization. Default: identity block on the first r variables;
    // optionally a unit coefficient on user-chosen variables, one per vector.
    if (r > 0) {
        Eigen::MatrixXd rows(r, r);
        bool use_norm = true;
        if (!spec.normalize_on.empty()) {
            if (static_cast<int>(spec.normalize_on.size()) != r)
                throw Error(ErrorCode::InvalidArgument,
                            "normalize_on must name one variable per cointegration vector");
            for (int j = 0; j < r; ++j) {
                const auto it = std::find(conc.endo_names.begin(), conc.endo_names.end(),
                                          spec.normalize_on[j]);
                if (it == conc.endo_names.end())
                    throw Error(ErrorCode::UnknownColumn,
                                "normalize_on: unknown variable '" + spec.normalize_on[j] + "'");
                rows.row(j) =
                    beta_star.row(std::distance(conc.endo_names.begin(), it));
            }
        } else {
            rows = beta_star.topRows(r);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
        if (lu.isInvertible()) {
            beta_star = beta_star * lu.inverse();
        } else {
            use_norm = false;  // keep V'S11V = I normalization
        }
        (void)use_norm;
    }

    // alpha = S01 b (b'S11 b)^-1 for whatever normalization beta ended with.
    Eigen::MatrixXd alpha(n, r);
    if (r > 0) {
        const Eigen::MatrixXd bsb = beta_star.transpose() * rrr.s11 * beta_star;
        alpha = rrr.s01 * beta_star * bsb.inverse();
    }

    Eigen::VectorXd eigenvalues =
        rrr.eigenvalues.head(std::min<Eigen::Index>(n, p1));
    return assemble_estimate(frame, spec, conc, alpha, beta_star, eigenvalues);
}

}  // namespace cvar
