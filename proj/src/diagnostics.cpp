#include "cvar/diagnostics.hpp"

#include <cmath>

#include "cvar/dynamics.hpp"
#include "cvar/errors.hpp"
#include "cvar/linalg.hpp"
#include "cvar/parallel.hpp"
#include "cvar/rng.hpp"
#include "cvar/stats.hpp"

namespace cvar {

namespace {

// L_T(t) path for given concentrated residuals and full-sample estimates.
Eigen::VectorXd nyblom_path(const Eigen::MatrixXd& r0, const Eigen::MatrixXd& r1,
                            const Eigen::MatrixXd& alpha, const Eigen::MatrixXd& beta_star,
                            const Eigen::MatrixXd& omega, int t_min) {
    const auto t_eff = r0.rows();
    const auto p1 = r1.cols();

    const Eigen::MatrixXd n_basis = orthogonal_complement(beta_star);  // p1 x (p1-r)
    const Eigen::LLT<Eigen::MatrixXd> omega_llt(omega);
    if (omega_llt.info() != Eigen::Success)
        throw Error(ErrorCode::NonPositiveDefinite, "Omega not PD in stability test");
    const Eigen::MatrixXd oi_alpha = omega_llt.solve(alpha);      // Omega^-1 alpha
    const Eigen::MatrixXd v = alpha.transpose() * oi_alpha;       // r x r
    const Eigen::MatrixXd ba = beta_star * alpha.transpose();     // p1 x n

    Eigen::MatrixXd s10_cum = Eigen::MatrixXd::Zero(p1, r0.cols());  // sum R1 R0'
    Eigen::MatrixXd s11_cum = Eigen::MatrixXd::Zero(p1, p1);         // sum R1 R1'

    // Full-sample M needs S11(T); accumulate once, then replay cumulatively.
    Eigen::MatrixXd s11_full = r1.transpose() * r1;
    const Eigen::MatrixXd m =
        n_basis.transpose() * s11_full * n_basis / static_cast<double>(t_eff * t_eff);
    const Eigen::LLT<Eigen::MatrixXd> m_llt(m);
    const Eigen::FullPivLU<Eigen::MatrixXd> v_lu(v);
    if (m_llt.info() != Eigen::Success || !v_lu.isInvertible())
        throw Error(ErrorCode::SingularMatrix,
                    "singular normalization in stability test (V or M)");
    const Eigen::MatrixXd v_inv = v_lu.inverse();

    Eigen::VectorXd path(t_eff - t_min + 1);
    const double big_t = static_cast<double>(t_eff);
    for (Eigen::Index t = 1; t <= t_eff; ++t) {
        s10_cum.noalias() += r1.row(t - 1).transpose() * r0.row(t - 1);
        s11_cum.noalias() += r1.row(t - 1).transpose() * r1.row(t - 1);
        if (t < t_min) continue;
        const double inv_t = 1.0 / static_cast<double>(t);
        // S(t) = N'(S01(t) - alpha beta*' S11(t))' Omega^-1 alpha
        //      = N'(S10(t) - S11(t) beta* alpha') Omega^-1 alpha.
        const Eigen::MatrixXd s_t =
            n_basis.transpose() * ((s10_cum - s11_cum * ba) * inv_t) * oi_alpha;
        const double ratio = static_cast<double>(t) / big_t;
        const Eigen::MatrixXd core = s_t.transpose() * m_llt.solve(s_t);
        path(t - t_min) = ratio * ratio * (v_inv * core).trace();
    }
    return path;
}

}  // namespace

NyblomResult nyblom_sequence(const TimeFrame& frame, const CvarSpec& spec,
                             const CvarEstimate& est, const NyblomOptions& options) {
    if (options.t_min_fraction <= 0.0 || options.t_min_fraction >= 1.0)
        throw Error(ErrorCode::InvalidArgument, "t_min_fraction must lie in (0,1)");
    if (est.r == 0)
        throw Error(ErrorCode::InvalidArgument,
                    "stability test needs at least one cointegration relation");
    const Concentrated conc = concentrate(frame, spec);
    const int t_eff = static_cast<int>(conc.r0.rows());
    const int t_min = std::max(2, static_cast<int>(std::ceil(options.t_min_fraction * t_eff)));

    NyblomResult out;
    out.t_min = t_min;
    out.path = nyblom_path(conc.r0, conc.r1, est.alpha, est.beta_star, est.omega, t_min);
    out.years.assign(conc.years.begin() + (t_min - 1), conc.years.end());
    out.sup_stat = out.path.maxCoeff();

    if (options.reference) {
        out.reference95 = *options.reference;
    } else {
        // Parametric bootstrap of sup_t L under the fitted model: simulate
        // Gaussian pseudo-samples, refit (unrestricted, same spec), recompute
        // the path.
        if (options.bootstrap < 99)
            throw Error(ErrorCode::InvalidArgument, "stability bootstrap needs B >= 99");
        out.reference_bootstrapped = true;
        const VecmDynamics dyn = VecmDynamics::from_estimate(est);
        const auto endo_cols = frame.columns_with_role(Role::Endogenous);
        const Eigen::MatrixXd x_obs = frame.dense_block(endo_cols);
        const Eigen::MatrixXd chol = cholesky_lower(est.omega, "Omega");
        std::vector<Eigen::VectorXd> init;
        for (int t = est.t0 - est.k; t < est.t0; ++t) init.push_back(x_obs.row(t));

        Eigen::MatrixXd dexog(t_eff, static_cast<Eigen::Index>(spec.exogenous.size()));
        for (std::size_t e = 0; e < spec.exogenous.size(); ++e) {
            const int c = frame.column(spec.exogenous[e]);
            for (int i = 0; i < t_eff; ++i) {
                const int s = est.t0 + i - spec.exog_lag;
                dexog(i, static_cast<Eigen::Index>(e)) =
                    frame.values()(s, c) - frame.values()(s - 1, c);
            }
        }
        Eigen::MatrixXd fdet(t_eff, static_cast<Eigen::Index>(est.frame_det_names.size()));
        for (std::size_t d = 0; d < est.frame_det_names.size(); ++d) {
            const int c = frame.column(est.frame_det_names[d]);
            for (int i = 0; i < t_eff; ++i)
                fdet(i, static_cast<Eigen::Index>(d)) = frame.values()(est.t0 + i, c);
        }

        std::vector<double> sups(options.bootstrap);
        parallel_for(
            options.bootstrap,
            [&](int b) {
                Rng rng = Rng::child(options.seed, b);
                Eigen::MatrixXd shocks =
                    rng.normal_matrix(t_eff, est.n) * chol.transpose();
                const Eigen::MatrixXd path =
                    dyn.simulate(init, est.years.front(), shocks, &dexog, &fdet);
                Eigen::MatrixXd values = frame.values();
                for (int i = 0; i < t_eff; ++i)
                    for (int j = 0; j < est.n; ++j)
                        values(est.t0 + i, endo_cols[j]) = path(i, j);
                const TimeFrame pseudo = frame.with_values(std::move(values), frame.missing());
                const CvarEstimate refit = fit(pseudo, spec);
                const Concentrated c2 = concentrate(pseudo, spec);
                const Eigen::VectorXd p2 = nyblom_path(c2.r0, c2.r1, refit.alpha,
                                                       refit.beta_star, refit.omega, t_min);
                sups[b] = p2.maxCoeff();
            },
            options.threads);
        out.reference95 = quantile(sups, 0.95);
    }
    out.exceeds = out.sup_stat > out.reference95;
    return out;
}

ResidualDiagnostics residual_diagnostics(const CvarEstimate& est, int max_lag) {
    const int t = est.t_eff;
    const int n = est.n;
    if (max_lag < 1 || max_lag >= t)
        throw Error(ErrorCode::InvalidArgument, "max_lag must lie in [1, T_eff)");
    const Eigen::MatrixXd& e = est.residuals;
    if (e.cwiseAbs().maxCoeff() < 1e-14)
        throw Error(ErrorCode::DegenerateResiduals, "residuals are identically zero");

    ResidualDiagnostics out;
    out.names = est.endo_names;
    out.max_lag = max_lag;
    out.acf_bound = 2.0 / std::sqrt(static_cast<double>(t));

    Eigen::MatrixXd centered = e;
    centered.rowwise() -= e.colwise().mean();

    out.acf = Eigen::MatrixXd::Zero(max_lag, n);
    for (int j = 0; j < n; ++j) {
        const double denom = centered.col(j).squaredNorm();
        if (denom <= 0.0)
            throw Error(ErrorCode::DegenerateResiduals,
                        "residual column '" + est.endo_names[j] + "' has no variance");
        for (int h = 1; h <= max_lag; ++h)
            out.acf(h - 1, j) =
                centered.col(j).tail(t - h).dot(centered.col(j).head(t - h)) / denom;
    }

    // Multivariate portmanteau with small-sample weights
    // Q = T^2 sum_h (T-h)^-1 tr(C_h' C_0^-1 C_h C_0^-1).
    const Eigen::MatrixXd c0 = centered.transpose() * centered / static_cast<double>(t);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(c0);
    if (!lu.isInvertible())
        throw Error(ErrorCode::DegenerateResiduals, "residual covariance is singular");
    const Eigen::MatrixXd c0_inv = lu.inverse();
    double q = 0.0;
    for (int h = 1; h <= max_lag; ++h) {
        const Eigen::MatrixXd ch = centered.bottomRows(t - h).transpose() *
                                   centered.topRows(t - h) / static_cast<double>(t);
        q += (ch.transpose() * c0_inv * ch * c0_inv).trace() /
             static_cast<double>(t - h);
    }
    out.portmanteau = q * t * t;
    // Degrees of freedom adjusted for the fitted short-run dynamics
    // (k - 1 lagged difference matrices) and the rank-r loading space.
    out.portmanteau_df = n * n * (max_lag - est.k + 1) - n * est.r;
    if (out.portmanteau_df <= 0)
        throw Error(ErrorCode::InvalidArgument,
                    "max_lag too small relative to the model order");
    out.portmanteau_pvalue = chi2_pvalue(out.portmanteau, out.portmanteau_df);

    const int half = t / 2;
    out.sd_first_half = Eigen::VectorXd(n);
    out.sd_second_half = Eigen::VectorXd(n);
    for (int j = 0; j < n; ++j) {
        const auto top = centered.col(j).head(half);
        const auto bot = centered.col(j).tail(t - half);
        out.sd_first_half(j) = std::sqrt(top.squaredNorm() / std::max(1, half - 1));
        out.sd_second_half(j) =
            std::sqrt(bot.squaredNorm() / std::max(1, t - half - 1));
    }
    return out;
}

}  // namespace cvar
