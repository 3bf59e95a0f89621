#pragma once

#include <Eigen/Dense>

namespace cvar {

// Orthonormal basis of the orthogonal complement of m (p x q, full column
// rank). Returns p x (p - q) with unit columns; for q == 0 the identity.
Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& m);

// Least-squares residuals of y (T x ny) on z (T x nz): y - z * coef.
// Throws SingularMatrix when z is rank deficient. nz == 0 returns y.
Eigen::MatrixXd ols_residuals(const Eigen::MatrixXd& y, const Eigen::MatrixXd& z);

// Least-squares coefficients of y on z, shape nz x ny.
Eigen::MatrixXd ols_coefficients(const Eigen::MatrixXd& y, const Eigen::MatrixXd& z);

// Solves the symmetric-definite generalized eigenproblem
//   det(lambda * S11 - S10 * S00^-1 * S01) = 0
// by Cholesky whitening of S11. Eigenvalues come back descending with
// eigenvectors normalized V' S11 V = I. If the Cholesky of S11 fails, a
// ridge of 1e-12 * trace is added once before giving up.
struct GeneralizedEig {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXd vectors;  // columns, V' S11 V = I
};
GeneralizedEig solve_rrr_eigensystem(const Eigen::MatrixXd& s00,
                                     const Eigen::MatrixXd& s01,
                                     const Eigen::MatrixXd& s11);

// Cholesky factor of a symmetric PD matrix; throws NonPositiveDefinite.
Eigen::MatrixXd cholesky_lower(const Eigen::MatrixXd& a, const char* what);

// Spectral radius (largest |eigenvalue|) of a square matrix.
double spectral_radius(const Eigen::MatrixXd& a);

// Count of eigenvalues of a with modulus >= 1 - tol.
int count_unit_eigenvalues(const Eigen::MatrixXd& a, double tol = 1e-8);

// Rank from singular values with relative threshold.
int numerical_rank(const Eigen::MatrixXd& a, double rel_tol = 1e-10);

}  // namespace cvar
