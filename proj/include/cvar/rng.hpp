#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace cvar {

// Deterministic RNG used throughout the bootstrap machinery. Normal draws
// are produced by Box-Muller on raw mt19937_64 words, so a given seed yields
// the same stream on every platform. Replicate b of a bootstrap owns
// Rng::child(seed, b), which makes results independent of scheduling order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(scramble(seed)) {}

    static Rng child(std::uint64_t seed, std::uint64_t replicate) {
        return Rng(seed ^ (replicate + 1));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on (0, 1]: strictly positive so log() below is safe.
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Unbiased integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    Eigen::VectorXd normal_vector(int n) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v(i) = normal();
        return v;
    }

    // Rows are iid N(0, I_n).
    Eigen::MatrixXd normal_matrix(int rows, int cols) {
        Eigen::MatrixXd m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = normal();
        return m;
    }

  private:
    // splitmix64 finalizer; decorrelates the xor-adjacent child seeds.
    static std::uint64_t scramble(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace cvar
