#include "cvar/longrun.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "cvar/dynamics.hpp"
#include "cvar/errors.hpp"
#include "cvar/linalg.hpp"
#include "cvar/parallel.hpp"
#include "cvar/rng.hpp"
#include "cvar/stats.hpp"

namespace cvar {

LongRunRep compute_C(const CvarEstimate& est) {
    const int n = est.n;
    const int r = est.r;

    LongRunRep rep;
    rep.gamma_total = Eigen::MatrixXd::Identity(n, n);
    for (const auto& g : est.gammas) rep.gamma_total -= g;

    const Eigen::MatrixXd beta = est.beta();
    rep.alpha_perp = orthogonal_complement(est.alpha);
    rep.beta_perp = orthogonal_complement(beta);

    if (r == n) {
        rep.c = Eigen::MatrixXd::Zero(n, n);
    } else {
        const Eigen::MatrixXd m = rep.alpha_perp.transpose() * rep.gamma_total * rep.beta_perp;
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
        lu.setThreshold(1e-10);
        if (!lu.isInvertible())
            throw Error(ErrorCode::I1ConditionFailed,
                        "alpha_perp' Gamma beta_perp is singular (I(1) condition fails)");
        rep.c = rep.beta_perp * lu.inverse() * rep.alpha_perp.transpose();
    }

    if (r > 0) {
        const Eigen::MatrixXd ba = beta.transpose() * est.alpha;
        Eigen::FullPivLU<Eigen::MatrixXd> lu(ba);
        lu.setThreshold(1e-12);
        if (!lu.isInvertible())
            throw Error(ErrorCode::SingularMatrix, "beta' alpha is singular");
        rep.abar_term = est.alpha * lu.inverse();

        const double scale = std::max(1.0, rep.c.cwiseAbs().maxCoeff());
        if ((beta.transpose() * rep.c).cwiseAbs().maxCoeff() > 1e-8 * scale ||
            (rep.c * est.alpha).cwiseAbs().maxCoeff() > 1e-8 * scale)
            throw Error(ErrorCode::I1ConditionFailed,
                        "computed C violates beta'C = 0 / C alpha = 0");
    } else {
        rep.abar_term = Eigen::MatrixXd::Zero(n, 0);
    }
    return rep;
}

Eigen::VectorXd longrun_expectation(const LongRunRep& rep, const CvarEstimate& est,
                                    const Eigen::VectorXd& x0, int x0_year) {
    Eigen::VectorXd out = rep.c * x0;
    if (est.r > 0) out += rep.abar_term * est.mu_at(x0_year);
    return out;
}

namespace {

// Runs `stat` on refits of the model to residual-bootstrap pseudo-samples.
// Returns one vector of statistic draws per replicate.
std::vector<Eigen::VectorXd> residual_bootstrap_stats(
    const CvarEstimate& est, const TimeFrame& frame, int replications, std::uint64_t seed,
    unsigned threads,
    const std::function<Eigen::VectorXd(const CvarEstimate&)>& stat) {
    frame.require_prepared();
    const int t_eff = est.t_eff;
    const int t0 = est.t0;
    const auto endo_cols = frame.columns_with_role(Role::Endogenous);

    // Centered residual rows for recursive resampling.
    Eigen::MatrixXd centered = est.residuals;
    centered.rowwise() -= est.residuals.colwise().mean();

    const VecmDynamics dyn = VecmDynamics::from_estimate(est);

    // Exogenous differences and user deterministic values along the
    // estimation sample, in equation-row order.
    Eigen::MatrixXd dexog(t_eff, static_cast<Eigen::Index>(est.spec.exogenous.size()));
    for (std::size_t e = 0; e < est.spec.exogenous.size(); ++e) {
        const int c = frame.column(est.spec.exogenous[e]);
        for (int i = 0; i < t_eff; ++i) {
            const int s = t0 + i - est.spec.exog_lag;
            dexog(i, static_cast<Eigen::Index>(e)) =
                frame.values()(s, c) - frame.values()(s - 1, c);
        }
    }
    Eigen::MatrixXd frame_det(t_eff, static_cast<Eigen::Index>(est.frame_det_names.size()));
    for (std::size_t d = 0; d < est.frame_det_names.size(); ++d) {
        const int c = frame.column(est.frame_det_names[d]);
        for (int i = 0; i < t_eff; ++i)
            frame_det(i, static_cast<Eigen::Index>(d)) = frame.values()(t0 + i, c);
    }

    std::vector<Eigen::VectorXd> init;
    const Eigen::MatrixXd x_obs = frame.dense_block(endo_cols);
    for (int t = t0 - est.k; t < t0; ++t) init.push_back(x_obs.row(t));

    std::vector<Eigen::VectorXd> draws(replications);
    std::vector<int> failures(replications, 0);
    const int max_attempts_per_rep = 10;

    parallel_for(
        replications,
        [&](int b) {
            for (int attempt = 0; attempt < max_attempts_per_rep; ++attempt) {
                Rng rng = Rng::child(seed, static_cast<std::uint64_t>(b) * 131 + attempt);
                Eigen::MatrixXd shocks(t_eff, est.n);
                for (int t = 0; t < t_eff; ++t)
                    shocks.row(t) = centered.row(
                        static_cast<Eigen::Index>(rng.uniform_index(t_eff)));
                const Eigen::MatrixXd path =
                    dyn.simulate(init, est.years.front(), shocks, &dexog, &frame_det);

                Eigen::MatrixXd values = frame.values();
                for (int i = 0; i < t_eff; ++i)
                    for (int j = 0; j < est.n; ++j) values(t0 + i, endo_cols[j]) = path(i, j);
                const TimeFrame pseudo = frame.with_values(std::move(values), frame.missing());
                try {
                    const CvarEstimate refit = fit(pseudo, est.spec);
                    draws[b] = stat(refit);
                    return;
                } catch (const Error&) {
                    ++failures[b];  // redraw
                }
            }
            draws[b] = Eigen::VectorXd();  // marks exhausted replicate
        },
        threads);

    int dead = 0;
    for (const auto& d : draws)
        if (d.size() == 0) ++dead;
    if (dead > 0)
        throw Error(ErrorCode::NonConvergence,
                    std::to_string(dead) + " bootstrap replicates kept failing the I(1) "
                    "condition after redraws");
    return draws;
}

}  // namespace

Eigen::MatrixXd bootstrap_c_tstats(const CvarEstimate& est, const TimeFrame& frame,
                                   int replications, std::uint64_t seed, unsigned threads) {
    if (replications < 199)
        throw Error(ErrorCode::InvalidArgument, "c_tstats: need at least 199 replications");
    const int n = est.n;
    const LongRunRep point = compute_C(est);

    const auto draws = residual_bootstrap_stats(
        est, frame, replications, seed, threads, [](const CvarEstimate& refit) {
            const LongRunRep rep = compute_C(refit);
            return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(rep.c.data(),
                                                                     rep.c.size()));
        });

    Eigen::MatrixXd tstats(n, n);
    std::vector<double> cell(draws.size());
    for (int idx = 0; idx < n * n; ++idx) {
        for (std::size_t b = 0; b < draws.size(); ++b) cell[b] = draws[b](idx);
        const double sd = sample_sd(cell);
        tstats(idx % n, idx / n) = sd > 0 ? point.c(idx % n, idx / n) / sd : 0.0;
    }
    return tstats;
}

DerivedIndicators derived_indicators(const CvarEstimate& est, const LongRunRep& rep,
                                     const TimeFrame& frame,
                                     const IndicatorOptions& options) {
    const auto names = est.endo_names;
    auto find = [&](const std::string& v) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == v) return static_cast<int>(i);
        throw Error(ErrorCode::NameMapIncomplete,
                    "indicator name map: no endogenous column '" + v + "'");
    };
    const int iy = find(options.y), ic = find(options.c), im = find(options.m),
              ih = find(options.h);
    (void)ic;
    if (est.r < 2)
        throw Error(ErrorCode::InvalidArgument,
                    "derived indicators need two cointegration relations");

    auto evaluate = [&](const Eigen::MatrixXd& beta,
                        const Eigen::MatrixXd& c) -> Eigen::Vector3d {
        Eigen::Vector3d v;
        if (beta(iy, 0) == 0.0)
            throw Error(ErrorCode::InvalidArgument, "relation 1 has zero weight on y");
        if (beta(ih, 1) == 0.0)
            throw Error(ErrorCode::InvalidArgument, "relation 2 has zero weight on h");
        v(0) = -beta(ih, 0) / beta(iy, 0);                           // xi
        v(1) = -beta(im, 1) / beta(ih, 1) * options.concentration_change;  // dT
        v(2) = -c(iy, im) * 100.0 / options.gtc_stock;               // gamma
        return v;
    };

    DerivedIndicators out;
    const Eigen::Vector3d v = evaluate(est.beta(), rep.c);
    out.temperature_damage = v(0);
    out.warming_due_to_co2 = v(1);
    out.gdp_loss_per_gtc = v(2);
    out.c_ym = rep.c(iy, im);
    out.c_ym_per_unit_m = rep.c(im, im) != 0.0 ? rep.c(iy, im) / rep.c(im, im) : 0.0;

    if (options.bootstrap > 0) {
        const auto draws = residual_bootstrap_stats(
            est, frame, options.bootstrap, options.seed, options.threads,
            [&](const CvarEstimate& refit) -> Eigen::VectorXd {
                const LongRunRep r2 = compute_C(refit);
                return evaluate(refit.beta(), r2.c);
            });
        std::vector<double> cell(draws.size());
        Eigen::Vector3d se;
        for (int j = 0; j < 3; ++j) {
            for (std::size_t b = 0; b < draws.size(); ++b) cell[b] = draws[b](j);
            se(j) = sample_sd(cell);
        }
        out.temperature_damage_se = se(0);
        out.warming_due_to_co2_se = se(1);
        out.gdp_loss_per_gtc_se = se(2);
    }
    return out;
}

}  // namespace cvar
