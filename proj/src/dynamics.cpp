#include "cvar/dynamics.hpp"

#include "cvar/errors.hpp"
#include "cvar/linalg.hpp"

namespace cvar {

VecmDynamics VecmDynamics::from_estimate(const CvarEstimate& est) {
    VecmDynamics d;
    d.n_ = est.n;
    d.k_ = est.k;
    d.r_ = est.r;
    d.origin_year_ = est.first_year;
    d.alpha_ = est.alpha;
    d.beta_ = est.beta();
    d.beta_star_ = est.beta_star;
    d.delta_ = est.delta();
    d.gammas_ = est.gammas;
    d.det_coef_ = est.det_coef;
    d.exog_coef_ = est.exog_coef;
    d.frame_det_coef_ = est.frame_det_coef;
    d.omega_ = est.omega;
    d.det_ = est.spec.deterministic;
    return d;
}

Eigen::VectorXd VecmDynamics::disequilibrium(const Eigen::VectorXd& x, int year) const {
    Eigen::VectorXd ec = beta_.transpose() * x;
    if (delta_.rows() > 0)
        ec += delta_.transpose() * restricted_deterministic_row(det_, year, origin_year_);
    return ec;
}

Eigen::VectorXd VecmDynamics::step(const std::vector<Eigen::VectorXd>& window, int year,
                                   const Eigen::VectorXd& dexog,
                                   const Eigen::VectorXd& frame_det,
                                   const Eigen::VectorXd& eps) const {
    if (static_cast<int>(window.size()) < k_)
        throw Error(ErrorCode::InvalidArgument, "dynamics step: window shorter than k");
    const Eigen::VectorXd& x_prev = window[0];

    Eigen::VectorXd dx = Eigen::VectorXd::Zero(n_);
    if (r_ > 0) dx += alpha_ * disequilibrium(x_prev, year);
    for (std::size_t i = 0; i < gammas_.size(); ++i)
        dx += gammas_[i] * (window[i] - window[i + 1]);
    if (det_coef_.cols() > 0)
        dx += det_coef_ * unrestricted_deterministic_row(det_, year);
    if (exog_coef_.cols() > 0) {
        if (dexog.size() != exog_coef_.cols())
            throw Error(ErrorCode::InvalidArgument, "dynamics step: bad exog size");
        dx += exog_coef_ * dexog;
    }
    if (frame_det_coef_.cols() > 0) {
        if (frame_det.size() != frame_det_coef_.cols())
            throw Error(ErrorCode::InvalidArgument, "dynamics step: bad frame det size");
        dx += frame_det_coef_ * frame_det;
    }
    return x_prev + dx + eps;
}

Eigen::MatrixXd VecmDynamics::companion(const Eigen::MatrixXd* feedback) const {
    // Levels VAR blocks: A1 = I + alpha beta' + Gamma_1, Ai = Gamma_i - Gamma_{i-1},
    // Ak = -Gamma_{k-1}. With feedback P on the current state, the control is
    // seen by both the error-correction term and the most recent difference,
    // so A1 -> A1 * P.
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n_, n_);
    std::vector<Eigen::MatrixXd> a(k_ + 1);
    a[1] = eye + alpha_ * beta_.transpose();
    if (!gammas_.empty()) a[1] += gammas_[0];
    for (int i = 2; i <= k_ - 1; ++i) a[i] = gammas_[i - 1] - gammas_[i - 2];
    if (k_ >= 2) a[k_] = -gammas_[k_ - 2];
    if (feedback) a[1] = a[1] * (*feedback);

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n_ * k_, n_ * k_);
    for (int i = 1; i <= k_; ++i) comp.block(0, (i - 1) * n_, n_, n_) = a[i];
    if (k_ > 1)
        comp.block(n_, 0, n_ * (k_ - 1), n_ * (k_ - 1)) =
            Eigen::MatrixXd::Identity(n_ * (k_ - 1), n_ * (k_ - 1));
    return comp;
}

int VecmDynamics::unit_root_count(double tol) const {
    return count_unit_eigenvalues(companion(), tol);
}

Eigen::MatrixXd VecmDynamics::simulate(const std::vector<Eigen::VectorXd>& init,
                                       int start_year, const Eigen::MatrixXd& shocks,
                                       const Eigen::MatrixXd* dexog,
                                       const Eigen::MatrixXd* frame_det) const {
    if (static_cast<int>(init.size()) < k_)
        throw Error(ErrorCode::InvalidArgument, "simulate: init window shorter than k");
    const auto t_steps = shocks.rows();
    Eigen::MatrixXd path(t_steps, n_);

    // window[0] is most recent.
    std::vector<Eigen::VectorXd> window(init.rbegin(), init.rend());
    for (Eigen::Index t = 0; t < t_steps; ++t) {
        Eigen::VectorXd dex = Eigen::VectorXd::Zero(exog_coef_.cols());
        if (dexog && dexog->rows() > t) dex = dexog->row(t);
        Eigen::VectorXd fd = Eigen::VectorXd::Zero(frame_det_coef_.cols());
        if (frame_det && frame_det->rows() > t) fd = frame_det->row(t);
        const Eigen::VectorXd x =
            step(window, start_year + static_cast<int>(t), dex, fd, shocks.row(t));
        path.row(t) = x;
        for (std::size_t i = window.size() - 1; i > 0; --i) window[i] = window[i - 1];
        window[0] = x;
    }
    return path;
}

}  // namespace cvar
