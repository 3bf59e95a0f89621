#include "cvar/restrictions.hpp"

#include <cmath>
#include <string>

#include "cvar/errors.hpp"
#include "cvar/linalg.hpp"
#include "cvar/stats.hpp"

namespace cvar {

void RestrictionSet::validate(int n, int p1, int r) const {
    if (r == 0)
        throw Error(ErrorCode::InvalidArgument, "restrictions need rank >= 1");
    if (!beta.empty() && static_cast<int>(beta.size()) != r)
        throw Error(ErrorCode::InfeasibleRestrictions,
                    "need one beta restriction per cointegration vector");
    for (const auto& b : beta) {
        if (b.h.size() == 0) continue;
        if (b.h.rows() != p1)
            throw Error(ErrorCode::InfeasibleRestrictions,
                        "H has " + std::to_string(b.h.rows()) + " rows, expected " +
                            std::to_string(p1));
        if (b.h.cols() < 1 || numerical_rank(b.h) < b.h.cols())
            throw Error(ErrorCode::InfeasibleRestrictions, "H is not of full column rank");
        if (b.normalize_row >= p1)
            throw Error(ErrorCode::InfeasibleRestrictions, "normalization row out of range");
    }
    if (alpha_free.size() != 0) {
        if (alpha_free.rows() != n || alpha_free.cols() != r)
            throw Error(ErrorCode::InfeasibleRestrictions, "alpha pattern must be n x r");
        for (int j = 0; j < r; ++j) {
            bool any = false;
            for (int i = 0; i < n; ++i) any = any || alpha_free(i, j);
            if (!any)
                throw Error(ErrorCode::InfeasibleRestrictions,
                            "alpha column " + std::to_string(j) +
                                " is fully zeroed; rank r is unachievable");
        }
    }
}

int RestrictionSet::degrees_of_freedom(int n, int p1, int r) const {
    int df = -r * (r - 1);
    for (int j = 0; j < r; ++j) {
        const int s_j = (beta.empty() || beta[j].h.size() == 0)
                            ? p1
                            : static_cast<int>(beta[j].h.cols());
        df += p1 - s_j;
    }
    if (alpha_free.size() != 0)
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < n; ++i)
                if (!alpha_free(i, j)) ++df;
    return df;
}

namespace {

// GLS update of alpha under a zero pattern, Omega fixed:
// minimize tr Omega^-1 (S00 - alpha Sv0 - S0v alpha' + alpha Svv alpha').
Eigen::MatrixXd alpha_gls(const Eigen::MatrixXd& s0v, const Eigen::MatrixXd& svv,
                          const Eigen::MatrixXd& omega_inv,
                          const Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>& free) {
    const int n = static_cast<int>(s0v.rows());
    const int r = static_cast<int>(s0v.cols());
    std::vector<std::pair<int, int>> idx;
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i)
            if (free.size() == 0 || free(i, j)) idx.emplace_back(i, j);

    const auto nf = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd a(nf, nf);
    Eigen::VectorXd rhs(nf);
    const Eigen::MatrixXd g = omega_inv * s0v;  // n x r
    for (Eigen::Index p = 0; p < nf; ++p) {
        const auto [i, j] = idx[static_cast<std::size_t>(p)];
        rhs(p) = g(i, j);
        for (Eigen::Index q = 0; q < nf; ++q) {
            const auto [m, l] = idx[static_cast<std::size_t>(q)];
            a(p, q) = svv(j, l) * omega_inv(i, m);
        }
    }
    const Eigen::VectorXd theta = a.ldlt().solve(rhs);
    Eigen::MatrixXd alpha = Eigen::MatrixXd::Zero(n, r);
    for (Eigen::Index p = 0; p < nf; ++p)
        alpha(idx[static_cast<std::size_t>(p)].first,
              idx[static_cast<std::size_t>(p)].second) = theta(p);
    return alpha;
}

}  // namespace

RestrictedFit estimate_restricted(const TimeFrame& frame, const CvarSpec& spec,
                                  const RestrictionSet& restrictions, double tol,
                                  int max_iter) {
    if (!spec.rank_fixed() || spec.rank < 1)
        throw Error(ErrorCode::InvalidArgument, "restricted estimation needs a fixed rank >= 1");
    const CvarEstimate unrestricted = fit(frame, spec);
    const Concentrated conc = concentrate(frame, spec);
    const RrrSolution rrr = rrr_solve(conc.r0, conc.r1);
    const int n = conc.n;
    const int r = spec.rank;
    const int p1 = static_cast<int>(conc.z1.cols());
    restrictions.validate(n, p1, r);

    const Eigen::MatrixXd& s00 = rrr.s00;
    const Eigen::MatrixXd& s01 = rrr.s01;
    const Eigen::MatrixXd& s11 = rrr.s11;
    const Eigen::MatrixXd s10 = s01.transpose();

    // Effective H per column (identity when unrestricted).
    std::vector<Eigen::MatrixXd> h(r);
    for (int j = 0; j < r; ++j)
        h[j] = (restrictions.beta.empty() || restrictions.beta[j].h.size() == 0)
                   ? Eigen::MatrixXd::Identity(p1, p1)
                   : restrictions.beta[j].h;

    // Start from the unrestricted solution projected onto each H space.
    Eigen::MatrixXd beta(p1, r);
    for (int j = 0; j < r; ++j) {
        const Eigen::VectorXd b_u = unrestricted.beta_star.col(j);
        Eigen::VectorXd phi =
            (h[j].transpose() * h[j]).ldlt().solve(h[j].transpose() * b_u);
        if ((h[j] * phi).norm() < 1e-10) phi = Eigen::VectorXd::Unit(h[j].cols(), 0);
        beta.col(j) = h[j] * phi;
    }

    Eigen::MatrixXd omega = unrestricted.omega;
    Eigen::MatrixXd alpha = Eigen::MatrixXd::Zero(n, r);
    const int t_eff = rrr.t_eff;

    RestrictedFit out;
    out.loglik_unrestricted = unrestricted.loglik;
    double loglik = -std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < max_iter; ++iter) {
        const Eigen::MatrixXd omega_inv = omega.llt().solve(
            Eigen::MatrixXd::Identity(n, n));

        // beta steps, one column at a time given alpha, Omega.
        if (iter > 0) {
            for (int j = 0; j < r; ++j) {
                const Eigen::VectorXd oi_aj = omega_inv * alpha.col(j);
                const double a_norm = alpha.col(j).dot(oi_aj);
                if (a_norm < 1e-14) continue;  // unloaded vector, keep current
                Eigen::VectorXd partial = s10 * oi_aj;
                for (int m = 0; m < r; ++m) {
                    if (m == j) continue;
                    partial -= s11 * beta.col(m) * (alpha.col(m).dot(oi_aj));
                }
                const Eigen::MatrixXd hsh = h[j].transpose() * s11 * h[j];
                const Eigen::VectorXd phi =
                    hsh.ldlt().solve(h[j].transpose() * partial) / a_norm;
                beta.col(j) = h[j] * phi;
            }
        }

        // alpha step given beta, Omega; then Omega given both.
        const Eigen::MatrixXd s0v = s01 * beta;
        const Eigen::MatrixXd svv = beta.transpose() * s11 * beta;
        alpha = alpha_gls(s0v, svv, omega_inv, restrictions.alpha_free);
        omega = s00 - alpha * s0v.transpose() - s0v * alpha.transpose() +
                alpha * svv * alpha.transpose();
        omega = 0.5 * (omega + omega.transpose());

        const double ll = gaussian_loglik(t_eff, omega);
        out.loglik_path.push_back(ll);
        if (ll + 1e-7 < loglik)
            throw Error(ErrorCode::NonConvergence,
                        "switching algorithm log-likelihood decreased");
        const double gain = ll - loglik;
        loglik = ll;
        out.iterations = iter + 1;
        if (iter > 0 && gain < tol) {
            out.converged = true;
            break;
        }
    }
    if (!out.converged)
        throw Error(ErrorCode::NonConvergence,
                    "switching algorithm did not converge in " + std::to_string(max_iter) +
                        " iterations (last loglik " + std::to_string(loglik) + ")");

    // Post-convergence scale normalization per vector.
    for (int j = 0; j < r; ++j) {
        double scale = 0.0;
        if (!restrictions.beta.empty() && restrictions.beta[j].normalize_row >= 0) {
            const int row = restrictions.beta[j].normalize_row;
            const double v = beta(row, j);
            if (std::abs(v) < 1e-12)
                throw Error(ErrorCode::InfeasibleRestrictions,
                            "cannot normalize vector " + std::to_string(j) +
                                ": coefficient at the normalization row is zero");
            scale = restrictions.beta[j].normalize_value / v;
        } else {
            // Deterministic reporting scale: unit norm, largest entry positive.
            Eigen::Index imax;
            beta.col(j).cwiseAbs().maxCoeff(&imax);
            scale = 1.0 / beta.col(j).norm();
            if (beta(imax, j) < 0) scale = -scale;
        }
        beta.col(j) *= scale;
        alpha.col(j) /= scale;
    }

    out.estimate =
        assemble_estimate(frame, spec, conc, alpha, beta, unrestricted.eigenvalues);
    out.lr = 2.0 * (unrestricted.loglik - out.estimate.loglik);
    if (out.lr < 0 && out.lr > -1e-6) out.lr = 0.0;
    if (out.lr < 0)
        throw Error(ErrorCode::NonConvergence,
                    "restricted log-likelihood exceeds the unrestricted one");
    out.df = restrictions.degrees_of_freedom(n, p1, r);
    out.pvalue = out.df > 0 ? chi2_pvalue(out.lr, out.df) : 1.0;
    return out;
}

}  // namespace cvar
