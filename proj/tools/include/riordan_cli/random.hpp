#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "riordan/poly.hpp"
#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan::cli {

// Small rationals keep the exact arithmetic fast while still exercising
// non-integer coefficients.
class SeriesGen {
 public:
  explicit SeriesGen(std::uint64_t seed) : rng_(seed) {}

  Rational rational(long num_span = 3, long den_max = 3) {
    std::uniform_int_distribution<long> num(-num_span, num_span);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(rng_), den(rng_));
  }

  Rational nonzero(long num_span = 3, long den_max = 3) {
    for (;;) {
      Rational r = rational(num_span, den_max);
      if (!r.is_zero()) return r;
    }
  }

  /// a_0 = 1, the rest small rationals.
  Series unit_series(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (std::size_t k = 1; k <= order; ++k) c[k] = rational();
    return Series(std::move(c));
  }

  /// b_0 != 0.
  Series invertible_series(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = nonzero();
    for (std::size_t k = 1; k <= order; ++k) c[k] = rational();
    return Series(std::move(c));
  }

  /// g_0 = 0, g_1 != 0.
  Series reversible_series(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[1] = nonzero();
    for (std::size_t k = 2; k <= order; ++k) c[k] = rational();
    return Series(std::move(c));
  }

  Poly poly(std::size_t bound) {
    std::vector<Rational> c(bound + 1);
    for (auto& v : c) v = rational();
    return Poly(std::move(c));
  }

  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace riordan::cli
