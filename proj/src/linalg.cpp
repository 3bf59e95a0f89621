#include "cvar/linalg.hpp"

#include <string>

#include "cvar/errors.hpp"

namespace cvar {

Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& m) {
    const auto p = m.rows();
    const auto q = m.cols();
    if (q == 0) return Eigen::MatrixXd::Identity(p, p);
    if (q > p)
        throw Error(ErrorCode::InvalidArgument,
                    "orthogonal_complement: more columns than rows");
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd full = qr.householderQ() * Eigen::MatrixXd::Identity(p, p);
    return full.rightCols(p - q);
}

Eigen::MatrixXd ols_coefficients(const Eigen::MatrixXd& y, const Eigen::MatrixXd& z) {
    if (z.cols() == 0) return Eigen::MatrixXd::Zero(0, y.cols());
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(z);
    qr.setThreshold(1e-12);
    if (qr.rank() < z.cols())
        throw Error(ErrorCode::SingularMatrix,
                    "regressor cross-product is rank deficient (rank " +
                        std::to_string(qr.rank()) + " of " + std::to_string(z.cols()) + ")");
    return qr.solve(y);
}

Eigen::MatrixXd ols_residuals(const Eigen::MatrixXd& y, const Eigen::MatrixXd& z) {
    if (z.cols() == 0) return y;
    return y - z * ols_coefficients(y, z);
}

Eigen::MatrixXd cholesky_lower(const Eigen::MatrixXd& a, const char* what) {
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success)
        throw Error(ErrorCode::NonPositiveDefinite,
                    std::string(what) + " is not positive definite");
    return llt.matrixL();
}

GeneralizedEig solve_rrr_eigensystem(const Eigen::MatrixXd& s00,
                                     const Eigen::MatrixXd& s01,
                                     const Eigen::MatrixXd& s11) {
    Eigen::LLT<Eigen::MatrixXd> llt00(s00);
    if (llt00.info() != Eigen::Success)
        throw Error(ErrorCode::NonPositiveDefinite,
                    "moment matrix S00 is not positive definite (collinear data)");

    Eigen::LLT<Eigen::MatrixXd> llt11(s11);
    Eigen::MatrixXd s11_used = s11;
    if (llt11.info() != Eigen::Success) {
        // Ridge fallback, then one more attempt.
        s11_used += 1e-12 * s11.trace() * Eigen::MatrixXd::Identity(s11.rows(), s11.cols());
        llt11.compute(s11_used);
        if (llt11.info() != Eigen::Success)
            throw Error(ErrorCode::NonPositiveDefinite,
                        "moment matrix S11 is not positive definite (collinear data)");
    }

    // W = L^-1 S10 S00^-1 S01 L^-T, symmetric PSD with the same eigenvalues
    // as the pencil.
    Eigen::MatrixXd l11 = llt11.matrixL();
    Eigen::MatrixXd m = llt00.solve(s01);                     // S00^-1 S01
    Eigen::MatrixXd b = l11.triangularView<Eigen::Lower>().solve(s01.transpose() * m);
    Eigen::MatrixXd w =
        l11.triangularView<Eigen::Lower>().solve(b.transpose()).transpose();
    w = 0.5 * (w + w.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w);
    if (es.info() != Eigen::Success)
        throw Error(ErrorCode::SingularMatrix, "eigensolver failed on whitened pencil");

    const auto p = s11.rows();
    GeneralizedEig out;
    out.values = Eigen::VectorXd(p);
    out.vectors = Eigen::MatrixXd(p, p);
    // SelfAdjointEigenSolver sorts ascending; flip to descending.
    Eigen::MatrixXd vecs =
        l11.transpose().triangularView<Eigen::Upper>().solve(es.eigenvectors());
    for (Eigen::Index i = 0; i < p; ++i) {
        out.values(i) = es.eigenvalues()(p - 1 - i);
        out.vectors.col(i) = vecs.col(p - 1 - i);
    }
    // Clamp eigensolver noise below zero.
    for (Eigen::Index i = 0; i < p; ++i)
        if (out.values(i) < 0 && out.values(i) > -1e-12) out.values(i) = 0.0;
    return out;
}

double spectral_radius(const Eigen::MatrixXd& a) {
    if (a.rows() == 0) return 0.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

int count_unit_eigenvalues(const Eigen::MatrixXd& a, double tol) {
    if (a.rows() == 0) return 0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    int count = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (std::abs(es.eigenvalues()(i)) >= 1.0 - tol) ++count;
    return count;
}

int numerical_rank(const Eigen::MatrixXd& a, double rel_tol) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const double cutoff = rel_tol * svd.singularValues().maxCoeff();
    int r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > cutoff) ++r;
    return r;
}

}  // namespace cvar
