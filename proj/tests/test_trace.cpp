#include <doctest.h>

#include <cmath>

#include "cvar/errors.hpp"
#include "cvar/rng.hpp"
#include "cvar/trace_test.hpp"
#include "helpers.hpp"

using namespace cvar;

namespace {

TimeFrame random_walks(int t, int n, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(t, n);
    for (int i = 1; i < t; ++i)
        v.row(i) = v.row(i - 1) + rng.normal_vector(n).transpose();
    std::vector<std::string> names;
    std::vector<Role> roles;
    for (int j = 0; j < n; ++j) {
        names.push_back("v" + std::to_string(j));
        roles.push_back(Role::Endogenous);
    }
    return testutil::frame_from(1700, v, names, roles);
}

}  // namespace

TEST_CASE("deterministic cases map onto the standard tables") {
    DeterministicSpec det;
    CHECK(classify_deterministic_case(det, 1800) == DetCase::None);
    det.restricted_constant = true;
    CHECK(classify_deterministic_case(det, 1800) == DetCase::RestrictedConstant);
    det.restricted_constant = false;
    det.constant = true;
    CHECK(classify_deterministic_case(det, 1800) == DetCase::UnrestrictedConstant);
    det.restricted_trends = {1800};
    CHECK(classify_deterministic_case(det, 1800) == DetCase::RestrictedTrend);

    // A broken trend has no standard table.
    det.restricted_trends = {1850};
    try {
        (void)classify_deterministic_case(det, 1800);
        FAIL("expected UseBootstrap");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UseBootstrap);
    }
    // Step dummies break it too.
    det.restricted_trends.clear();
    det.step_dummies = {1850};
    CHECK_THROWS_AS((void)classify_deterministic_case(det, 1800), Error);
}

TEST_CASE("table quantiles and p-values are mutually consistent") {
    for (const DetCase c : {DetCase::None, DetCase::RestrictedConstant,
                            DetCase::UnrestrictedConstant, DetCase::RestrictedTrend}) {
        for (int d = 1; d <= 4; ++d) {
            const double q95 = trace_table_quantile(c, d, 0.95);
            CHECK(trace_table_pvalue(c, d, q95) == doctest::Approx(0.05).epsilon(1e-9));
            CHECK(trace_table_quantile(c, d, 0.90) < q95);
            CHECK(q95 < trace_table_quantile(c, d, 0.99));
        }
    }
    // Quantiles grow with the dimension.
    for (int d = 2; d <= 8; ++d)
        CHECK(trace_table_quantile(DetCase::None, d, 0.95) >
              trace_table_quantile(DetCase::None, d - 1, 0.95));
    // Known reference points.
    CHECK(trace_table_quantile(DetCase::RestrictedConstant, 1, 0.95) ==
          doctest::Approx(9.14).epsilon(0.02));
    CHECK(trace_table_quantile(DetCase::UnrestrictedConstant, 2, 0.95) ==
          doctest::Approx(15.49).epsilon(0.02));
    CHECK(trace_table_quantile(DetCase::UnrestrictedConstant, 1, 0.95) ==
          doctest::Approx(3.84).epsilon(0.02));
}

TEST_CASE("trace statistics are nonnegative and nonincreasing in r0") {
    const TimeFrame tf = random_walks(300, 3, 41);
    CvarSpec spec;
    spec.lag_order = 2;
    spec.deterministic.restricted_constant = true;
    const TraceResult res = trace_test(tf, spec);
    REQUIRE(res.rows.size() == 3);
    CHECK(res.rows[2].statistic >= 0.0);
    CHECK(res.rows[0].statistic >= res.rows[1].statistic);
    CHECK(res.rows[1].statistic >= res.rows[2].statistic);
    // Eigenvalues in [0,1), nonincreasing.
    CHECK(res.eigenvalues.minCoeff() >= 0.0);
    CHECK(res.eigenvalues.maxCoeff() < 1.0);
}

TEST_CASE("the trace test finds the rank of a cointegrated system") {
    // F1 has one relation; selection should say r = 1 on a long sample.
    const TimeFrame tf = testutil::f1_frame(600, 42);
    CvarSpec spec;
    spec.lag_order = 1;
    const TraceResult res = trace_test(tf, spec);
    CHECK(res.rows[0].pvalue < 0.05);   // r = 0 rejected
    CHECK(res.rows[1].pvalue >= 0.05);  // r = 1 kept
    CHECK(res.selected_rank(0.05) == 1);
}

TEST_CASE("asymptotic size is near nominal on pure random walks") {
    // Light version of the full acceptance run: 150 reps, wide gate.
    const int reps = 150;
    int rejections = 0;
    for (int i = 0; i < reps; ++i) {
        const TimeFrame tf = random_walks(400, 2, 1000 + i);
        CvarSpec spec;
        spec.lag_order = 1;
        spec.deterministic.restricted_constant = true;
        const TraceResult res = trace_test(tf, spec);
        if (res.rows[0].pvalue < 0.05) ++rejections;
    }
    const double rate = static_cast<double>(rejections) / reps;
    CHECK(rate > 0.01);
    CHECK(rate < 0.10);
}

TEST_CASE("bootstrap p-values are deterministic and sane under the null") {
    const TimeFrame tf = random_walks(150, 2, 77);
    CvarSpec spec;
    spec.lag_order = 1;
    spec.deterministic.constant = true;
    spec.deterministic.step_dummies = {1750};  // forces the bootstrap path

    const TraceResult a = trace_test(tf, spec, TraceMethod::Bootstrap, 99, 5);
    const TraceResult b = trace_test(tf, spec, TraceMethod::Bootstrap, 99, 5);
    for (int r0 = 0; r0 < 2; ++r0)
        CHECK(a.rows[r0].pvalue == b.rows[r0].pvalue);
    // Random walks: across a handful of samples the null r = 0 should
    // usually survive (any single draw can be unlucky).
    int kept = 0;
    for (int i = 0; i < 8; ++i) {
        const TimeFrame tfi = random_walks(150, 2, 500 + i);
        const TraceResult ri = trace_test(tfi, spec, TraceMethod::Bootstrap, 99, 11 + i);
        if (ri.rows[0].pvalue >= 0.05) ++kept;
    }
    CHECK(kept >= 6);

    // Asymptotic tables refuse this spec.
    try {
        (void)trace_test(tf, spec, TraceMethod::AsymptoticTable);
        FAIL("expected UseBootstrap");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UseBootstrap);
    }
}

TEST_CASE("exogenous regressors set the partial-system flag") {
    Rng rng(9);
    const int t = 200;
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(t, 3);
    for (int i = 1; i < t; ++i) {
        v(i, 0) = v(i - 1, 0) + rng.normal();
        v(i, 1) = v(i - 1, 1) + rng.normal();
        v(i, 2) = 0.5 * v(i - 1, 2) + rng.normal();
    }
    const TimeFrame tf = testutil::frame_from(
        1800, v, {"a", "b", "f"},
        {Role::Endogenous, Role::Endogenous, Role::Exogenous});
    CvarSpec spec;
    spec.lag_order = 2;
    spec.deterministic.restricted_constant = true;
    spec.exogenous = {"f"};
    const TraceResult res = trace_test(tf, spec);
    CHECK(res.exogenous_flagged);
}
