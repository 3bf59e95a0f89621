#include "cvar/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cvar/errors.hpp"

namespace cvar {

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) (modified Lentz), valid for x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0) throw Error(ErrorCode::InvalidArgument, "gamma_p: a must be positive");
    if (x < 0.0) throw Error(ErrorCode::InvalidArgument, "gamma_p: x must be nonnegative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double chi2_cdf(double x, double df) {
    if (x <= 0.0) return 0.0;
    return gamma_p(0.5 * df, 0.5 * x);
}

double quantile(std::vector<double> data, double p) {
    if (data.empty()) throw Error(ErrorCode::InvalidArgument, "quantile of empty data");
    p = std::clamp(p, 0.0, 1.0);
    std::sort(data.begin(), data.end());
    const double h = (static_cast<double>(data.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= data.size()) return data.back();
    const double frac = h - static_cast<double>(lo);
    return data[lo] + frac * (data[lo + 1] - data[lo]);
}

double mean(const std::vector<double>& data) {
    if (data.empty()) return 0.0;
    double s = 0.0;
    for (double v : data) s += v;
    return s / static_cast<double>(data.size());
}

double sample_sd(const std::vector<double>& data) {
    if (data.size() < 2) return 0.0;
    const double m = mean(data);
    double ss = 0.0;
    for (double v : data) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(data.size() - 1));
}

double batch_means_se(const Eigen::VectorXd& series, int n_batches) {
    const auto t = series.size();
    if (n_batches < 2 || t < 2 * n_batches)
        throw Error(ErrorCode::InvalidArgument, "batch_means_se: series too short");
    const auto batch = t / n_batches;
    std::vector<double> means;
    means.reserve(n_batches);
    for (int b = 0; b < n_batches; ++b)
        means.push_back(series.segment(b * batch, batch).mean());
    return sample_sd(means) / std::sqrt(static_cast<double>(n_batches));
}

}  // namespace cvar
