#pragma once

#include <cstdint>
#include <random>

#include "wittartin/rational.hpp"

namespace wittartin {

/// Deterministic source of small rationals and reals for sampled checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(engine_), den(engine_));
  }

  Vector rational_vector(Index n, int max_num, int max_den) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = rational(max_num, max_den);
    return v;
  }

  /// A vector with every entry of absolute value at most 1/10.
  Vector small_rational_vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = rational(1, 5) / 10;
    return v;
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  Eigen::VectorXd real_vector(Index n, double bound) {
    Eigen::VectorXd v(n);
    for (Index i = 0; i < n; ++i) v(i) = uniform(-bound, bound);
    return v;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wittartin
