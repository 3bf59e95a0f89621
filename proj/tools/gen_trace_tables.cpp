// Simulates the asymptotic trace-test distributions and emits the quantile
// tables embedded in src/trace_tables.hpp. One-off generator:
//
//   gen_trace_tables [reps] [steps] [threads] > ../src/trace_tables.hpp
//
// The limit distribution for dimension d is
//   tr{ (int F dB')' (int F F' du)^-1 (int F dB') },
// with F per deterministic case (Johansen 1996, ch. 15):
//   none:    F = B
//   rconst:  F = (B', 1)'
//   uconst:  F = (B_1..B_{d-1} demeaned, u demeaned)
//   rtrend:  F = (B_1..B_d demeaned, u demeaned)
//   utrend:  F = (B_1..B_{d-1} detrended, u^2 detrended)
// The trace functional is invariant to nonsingular column transforms of F,
// so raw random-walk levels and raw time indices can be used directly.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <Eigen/Dense>

#include "cvar/parallel.hpp"
#include "cvar/rng.hpp"
#include "cvar/stats.hpp"

namespace {

constexpr int kCases = 5;
constexpr int kMaxDim = 8;

std::vector<double> prob_grid() {
    std::vector<double> p;
    for (int i = 1; i <= 99; ++i) p.push_back(i / 100.0);
    p.push_back(0.995);
    p.push_back(0.999);
    return p;
}

// Residual-maker for regressing columns on a trend polynomial of given order
// (0 = demean, 1 = detrend).
void detrend_columns(Eigen::MatrixXd& f, int order, int t_steps) {
    Eigen::MatrixXd z(t_steps, order + 1);
    for (int t = 0; t < t_steps; ++t) {
        z(t, 0) = 1.0;
        if (order >= 1) z(t, 1) = static_cast<double>(t);
    }
    const Eigen::MatrixXd coef =
        (z.transpose() * z).ldlt().solve(z.transpose() * f);
    f -= z * coef;
}

double one_draw(cvar::Rng& rng, int c, int d, int t_steps) {
    Eigen::MatrixXd e = rng.normal_matrix(t_steps, d);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(t_steps, d);  // B at left endpoints
    for (int t = 1; t < t_steps; ++t) b.row(t) = b.row(t - 1) + e.row(t - 1);

    int f_cols = d;
    if (c == 1 || c == 3) f_cols = d + 1;
    Eigen::MatrixXd f(t_steps, f_cols);
    switch (c) {
        case 0:  // none
            f = b;
            break;
        case 1:  // restricted constant
            f.leftCols(d) = b;
            f.col(d).setOnes();
            break;
        case 2:  // unrestricted constant
            f.leftCols(d - 1) = b.leftCols(d - 1);
            for (int t = 0; t < t_steps; ++t) f(t, d - 1) = static_cast<double>(t);
            detrend_columns(f, 0, t_steps);
            break;
        case 3:  // restricted trend
            f.leftCols(d) = b;
            for (int t = 0; t < t_steps; ++t) f(t, d) = static_cast<double>(t);
            detrend_columns(f, 0, t_steps);
            break;
        case 4:  // unrestricted trend
            f.leftCols(d - 1) = b.leftCols(d - 1);
            for (int t = 0; t < t_steps; ++t)
                f(t, d - 1) = static_cast<double>(t) * static_cast<double>(t);
            detrend_columns(f, 1, t_steps);
            break;
    }

    const Eigen::MatrixXd s_fb = f.transpose() * e;  // int F dB'
    const Eigen::MatrixXd s_ff = f.transpose() * f;  // int F F'
    const Eigen::MatrixXd solved = s_ff.ldlt().solve(s_fb);
    return (s_fb.transpose() * solved).trace();
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 100000;
    const int t_steps = argc > 2 ? std::atoi(argv[2]) : 2000;
    const unsigned threads = argc > 3 ? std::atoi(argv[3]) : 2;
    const auto probs = prob_grid();

    std::printf("// Asymptotic trace-test quantiles, generated by tools/gen_trace_tables\n");
    std::printf("// (%d replications, %d-step discretization). Do not edit by hand.\n",
                reps, t_steps);
    std::printf("#pragma once\n\nnamespace cvar::tables {\n\n");
    std::printf("inline constexpr int kTraceCases = %d;\n", kCases);
    std::printf("inline constexpr int kTraceMaxDim = %d;\n", kMaxDim);
    std::printf("inline constexpr int kTraceProbs = %d;\n\n",
                static_cast<int>(probs.size()));
    std::printf("inline constexpr double kTraceProbGrid[kTraceProbs] = {\n    ");
    for (std::size_t i = 0; i < probs.size(); ++i)
        std::printf("%.3f,%s", probs[i], (i + 1) % 10 == 0 ? "\n    " : " ");
    std::printf("\n};\n\n");
    std::printf(
        "inline constexpr double kTraceQuantiles[kTraceCases][kTraceMaxDim][kTraceProbs] "
        "= {\n");

    for (int c = 0; c < kCases; ++c) {
        std::printf("    {   // case %d\n", c);
        for (int d = 1; d <= kMaxDim; ++d) {
            std::vector<double> draws(reps);
            cvar::parallel_for(
                reps,
                [&](int i) {
                    cvar::Rng rng = cvar::Rng::child(
                        0x7ace5eedULL + 1000ULL * c + d, static_cast<std::uint64_t>(i));
                    draws[i] = one_draw(rng, c, d, t_steps);
                },
                threads);
            std::sort(draws.begin(), draws.end());
            auto sorted_q = [&](double p) {
                const double h = (static_cast<double>(draws.size()) - 1.0) * p;
                const auto lo = static_cast<std::size_t>(h);
                if (lo + 1 >= draws.size()) return draws.back();
                return draws[lo] + (h - lo) * (draws[lo + 1] - draws[lo]);
            };
            std::printf("        {");
            for (std::size_t i = 0; i < probs.size(); ++i)
                std::printf("%.4f,%s", sorted_q(probs[i]),
                            (i + 1) % 8 == 0 ? "\n         " : " ");
            std::printf("},\n");
            std::fprintf(stderr, "case %d d %d: 95%% = %.3f\n", c, d, sorted_q(0.95));
        }
        std::printf("    },\n");
    }
    std::printf("};\n\n}  // namespace cvar::tables\n");
    return 0;
}
