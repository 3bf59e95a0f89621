// Generates the bundled synthetic dataset (data/synthetic.csv): a rank-2
// VAR(3) in four variables with a step dummy and broken trend from 1950 and
// one exogenous AR(1) regressor entering as a lagged difference. The
// recursion here is written out longhand on purpose so the library's replay
// identity is checked against an independent data-generating loop.
//
//   gen_synthetic [out.csv] [seed]

#include <cstdio>
#include <cstdlib>
#include <vector>

#include <Eigen/Dense>

#include "cvar/linalg.hpp"
#include "cvar/rng.hpp"

int main(int argc, char** argv) {
    const char* out_path = argc > 1 ? argv[1] : "data/synthetic.csv";
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20240811ULL;

    const int first_year = 1850, last_year = 2049, burnin = 60;
    const int break_year = 1950;
    const int n = 4;

    Eigen::MatrixXd alpha(n, 2);
    alpha << -0.12, 0.04,
              0.05, -0.06,
              0.02, 0.05,
              0.03, 0.20;
    Eigen::MatrixXd beta(n, 2);
    beta << 1.0, 0.0,
           -0.8, 0.0,
            0.0, 1.0,
            0.0, -1.25;
    Eigen::RowVector2d delta(-0.004, 0.0);  // broken-trend loadings in the relations
    Eigen::MatrixXd gamma1(n, n), gamma2(n, n);
    gamma1 << 0.15, 0.00, 0.00, 0.00,
              0.05, 0.10, 0.00, 0.00,
              0.00, 0.00, 0.20, 0.05,
              0.00, 0.00, 0.05, 0.10;
    gamma2 = 0.05 * Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd tau(n), step(n), gamma_exog(n);
    tau << 0.004, 0.004, 0.002, 0.001;
    step << 0.002, 0.001, 0.001, 0.0005;
    gamma_exog << 0.10, 0.05, -0.08, 0.30;
    Eigen::VectorXd shock_sd(n);
    shock_sd << 0.020, 0.025, 0.010, 0.050;
    Eigen::MatrixXd corr(n, n);
    corr << 1.0, 0.3, 0.0, 0.0,
            0.3, 1.0, 0.0, 0.0,
            0.0, 0.0, 1.0, 0.2,
            0.0, 0.0, 0.2, 1.0;
    const Eigen::MatrixXd omega =
        shock_sd.asDiagonal() * corr * shock_sd.asDiagonal();
    const Eigen::MatrixXd chol = cvar::cholesky_lower(omega, "omega");

    // I(1) sanity: the levels companion must carry exactly n - r = 2 unit
    // roots with everything else inside the circle.
    {
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(3 * n, 3 * n);
        comp.block(0, 0, n, n) =
            Eigen::MatrixXd::Identity(n, n) + alpha * beta.transpose() + gamma1;
        comp.block(0, n, n, n) = gamma2 - gamma1;
        comp.block(0, 2 * n, n, n) = -gamma2;
        comp.block(n, 0, 2 * n, 2 * n) = Eigen::MatrixXd::Identity(2 * n, 2 * n);
        const int units = cvar::count_unit_eigenvalues(comp);
        Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
        double max_stable = 0.0;
        for (Eigen::Index i = 0; i < comp.rows(); ++i) {
            const double m = std::abs(es.eigenvalues()(i));
            if (m < 1.0 - 1e-8) max_stable = std::max(max_stable, m);
        }
        std::fprintf(stderr, "companion: %d unit roots, largest stable modulus %.4f\n",
                     units, max_stable);
        if (units != 2 || max_stable > 0.98) {
            std::fprintf(stderr, "bad DGP parameterization\n");
            return 1;
        }
    }

    cvar::Rng rng(seed);
    const int start_year = first_year - burnin;
    const int total = last_year - start_year + 1;

    // Exogenous forcing: stationary AR(1).
    std::vector<double> f(total);
    f[0] = 0.0;
    for (int t = 1; t < total; ++t) f[t] = 0.5 * f[t - 1] + 0.05 * rng.normal();

    std::vector<Eigen::VectorXd> x(total);
    x[0] = Eigen::VectorXd(n);
    x[0] << 2.0, 2.5, 1.0, 0.8;  // on the attractor: beta'x = 0
    x[1] = x[0];
    x[2] = x[0];
    for (int t = 3; t < total; ++t) {
        const int year = start_year + t;
        const double trend =
            year >= break_year ? static_cast<double>(year - first_year + 1) : 0.0;
        const double step_on = year >= break_year ? 1.0 : 0.0;
        Eigen::VectorXd ec = beta.transpose() * x[t - 1] + delta.transpose() * trend;
        Eigen::VectorXd dx = tau + step * step_on + alpha * ec;
        dx += gamma1 * (x[t - 1] - x[t - 2]);
        dx += gamma2 * (x[t - 2] - x[t - 3]);
        dx += gamma_exog * (f[t - 1] - f[t - 2]);
        dx += chol * rng.normal_vector(n);
        x[t] = x[t - 1] + dx;
    }

    std::FILE* out = std::fopen(out_path, "w");
    if (!out) {
        std::fprintf(stderr, "cannot write %s\n", out_path);
        return 1;
    }
    std::fprintf(out, "year,y,c,m,h,f_vol\n");
    for (int t = burnin; t < total; ++t) {
        std::fprintf(out, "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", start_year + t,
                     x[t](0), x[t](1), x[t](2), x[t](3), f[t]);
    }
    std::fclose(out);
    std::fprintf(stderr, "wrote %s (%d rows, h at %d = %.4f)\n", out_path,
                 total - burnin, break_year, x[break_year - start_year](3));
    return 0;
}
