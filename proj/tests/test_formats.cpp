#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cvar/artifacts.hpp"
#include "cvar/errors.hpp"
#include "cvar/kvfile.hpp"
#include "helpers.hpp"

using namespace cvar;

TEST_CASE("kv files parse keys, lists, weights and matrices") {
    const std::string text =
        "# comment\n"
        "lag_order = 8\n"
        "exog = f_vol, solar\n"
        "a = y:1, c:0.5\n"
        "h = [1 0; 0 1; 0 0]\n"
        "matrix m 2 3\n"
        "1 2 3\n"
        "4 5 6\n"
        "endmatrix\n";
    const KvFile kv = KvFile::parse_text(text);
    CHECK(kv.get_int("lag_order") == 8);
    CHECK(kv.get_list("exog") == std::vector<std::string>{"f_vol", "solar"});
    const auto w = kv.get_weights("a");
    REQUIRE(w.size() == 2);
    CHECK(w[0].first == "y");
    CHECK(w[1].second == doctest::Approx(0.5));
    const Eigen::MatrixXd h = kv.get_matrix("h");
    CHECK(h.rows() == 3);
    CHECK(h(1, 1) == 1.0);
    const Eigen::MatrixXd m = kv.get_matrix("m");
    CHECK(m(1, 2) == 6.0);
    CHECK_FALSE(kv.has("absent"));
    CHECK(kv.get_int_or("absent", 7) == 7);
}

TEST_CASE("kv parse errors carry the line number") {
    try {
        (void)KvFile::parse_text("x = 1\nbroken line\n", "test.cfg");
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("test.cfg:2") != std::string::npos);
    }
}

TEST_CASE("model specs round-trip through the parser") {
    const std::string text =
        "lag_order = 8\n"
        "rank = 2\n"
        "constant = true\n"
        "step_dummy = 1800\n"
        "broken_trend = 1800\n"
        "exog = f_vol\n"
        "exog_lag = 1\n"
        "normalize = y, h\n";
    const CvarSpec spec = parse_model_spec(KvFile::parse_text(text));
    CHECK(spec.lag_order == 8);
    CHECK(spec.rank == 2);
    CHECK(spec.deterministic.constant);
    CHECK(spec.deterministic.step_dummies == std::vector<int>{1800});
    CHECK(spec.deterministic.restricted_trends == std::vector<int>{1800});
    CHECK(spec.exogenous == std::vector<std::string>{"f_vol"});
    CHECK(spec.normalize_on == std::vector<std::string>{"y", "h"});

    const CvarSpec searched = parse_model_spec(KvFile::parse_text("rank = search\n"));
    CHECK_FALSE(searched.rank_fixed());

    CHECK_THROWS_AS(
        (void)parse_model_spec(
            KvFile::parse_text("constant = true\nrestricted_constant = true\n")),
        Error);
}

TEST_CASE("restriction patterns compile to design matrices") {
    DeterministicSpec det;
    det.restricted_trends = {1800};
    const std::string text =
        "beta 1 = y:1, c:free, m:0, h:free, trend1800:free\n"
        "beta 2 = y:0, c:0, m:free, h:1, trend1800:0\n"
        "alpha 1 = y:free, c:free, m:0, h:0\n"
        "alpha 2 = y:0, c:0, m:free, h:free\n";
    const RestrictionSet set = parse_restrictions(KvFile::parse_text(text),
                                                  {"y", "c", "m", "h"}, det, 2);
    REQUIRE(set.beta.size() == 2);
    CHECK(set.beta[0].h.cols() == 4);  // y, c, h, trend free or pinned
    CHECK(set.beta[0].h.rows() == 5);
    CHECK(set.beta[0].normalize_row == 0);
    CHECK(set.beta[1].h.cols() == 2);  // m free, h pinned to 1
    CHECK(set.beta[1].normalize_row == 3);
    CHECK(set.degrees_of_freedom(4, 5, 2) == 6);  // matches the chi2(6) count
    REQUIRE(set.alpha_free.size() == 8);
    CHECK_FALSE(set.alpha_free(2, 0));
    CHECK(set.alpha_free(2, 1));
}

TEST_CASE("explicit H literals are accepted") {
    DeterministicSpec det;
    const std::string text = "beta_H 1 = [1 0; -1 0; 0 1]\n";
    const RestrictionSet set =
        parse_restrictions(KvFile::parse_text(text), {"a", "b", "c"}, det, 1);
    REQUIRE(set.beta.size() == 1);
    CHECK(set.beta[0].h.rows() == 3);
    CHECK(set.beta[0].h.cols() == 2);
}

TEST_CASE("policy configs build selection matrices") {
    const std::string text =
        "a = y:1, c:0.5\n"
        "b = h:1\n"
        "b_star = 0.7\n"
        "start = 1900\n"
        "ramp = 10\n";
    const PolicyConfig pc = parse_policy_config(KvFile::parse_text(text));
    CHECK(pc.phase_in.start_year == 1900);
    CHECK(pc.phase_in.ramp_years == 10);
    const Eigen::MatrixXd a = selection_matrix(pc.a_cols, {"y", "c", "m", "h"});
    CHECK(a(0, 0) == 1.0);
    CHECK(a(1, 0) == 0.5);
    CHECK(a(2, 0) == 0.0);
    const Eigen::MatrixXd b = selection_matrix(pc.b_cols, {"y", "c", "m", "h"});
    CHECK(b(3, 0) == 1.0);
    CHECK(pc.b_star(0) == doctest::Approx(0.7));

    // Multi-control form.
    const std::string two =
        "a 1 = y:1\na 2 = c:1\nb 1 = h:1\nb 2 = m:1\nb_star = 0.7, 5.9\nstart = 1900\n";
    const PolicyConfig pc2 = parse_policy_config(KvFile::parse_text(two));
    CHECK(pc2.a_cols.size() == 2);
    CHECK(pc2.b_star.size() == 2);
}

TEST_CASE("estimate artifacts round-trip bit-exactly") {
    const TimeFrame tf = testutil::f1_frame(150, 91);
    CvarSpec spec;
    spec.lag_order = 2;
    spec.rank = 1;
    spec.deterministic.constant = true;
    const CvarEstimate est = fit(tf, spec);

    const std::string path = "/tmp/estimate_roundtrip.txt";
    write_estimate(est, path, "deadbeef", 42);
    const CvarEstimate back = read_estimate(path);

    CHECK(back.n == est.n);
    CHECK(back.r == est.r);
    CHECK(back.k == est.k);
    CHECK(back.t0 == est.t0);
    CHECK(back.t_eff == est.t_eff);
    CHECK(back.endo_names == est.endo_names);
    CHECK((back.alpha - est.alpha).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.beta_star - est.beta_star).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.omega - est.omega).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.residuals - est.residuals).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(back.gammas.size() == est.gammas.size());
    CHECK((back.gammas[0] - est.gammas[0]).cwiseAbs().maxCoeff() == 0.0);
    CHECK(back.loglik == est.loglik);
    CHECK(back.years == est.years);
}

TEST_CASE("format_double round-trips doubles") {
    for (const double v : {0.1, -3.25e-17, 1234567.875, 0.0}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("content hashes are stable and input-sensitive") {
    const std::string h = content_hash("abc");
    CHECK(h.size() == 16);
    CHECK(h == content_hash("abc"));
    CHECK(h != content_hash("abd"));
}

TEST_CASE("path tables carry headers and a units line") {
    PathTable t;
    t.years = {2000, 2001};
    t.columns = {"obs_y", "cf_y"};
    t.values = Eigen::MatrixXd(2, 2);
    t.values << 1, 2, 3, 4;
    const std::string path = "/tmp/path_table.csv";
    write_path_table(t, path, "demo", "log levels");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# demo", 0) == 0);
    std::getline(in, line);
    CHECK(line == "year,obs_y,cf_y");
    std::getline(in, line);
    CHECK(line.rfind("# units:", 0) == 0);
}

TEST_CASE("band svg output is a self-contained svg") {
    std::vector<int> years{2000, 2001, 2002, 2003};
    Eigen::VectorXd obs(4), mid(4), lo(4), hi(4);
    obs << 1, 2, 3, 4;
    mid << 1, 1.8, 2.4, 3.1;
    lo = mid.array() - 0.5;
    hi = mid.array() + 0.5;
    const std::string path = "/tmp/band.svg";
    write_band_svg(path, "demo", years, obs, mid, lo, hi);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string svg = ss.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polygon") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}
