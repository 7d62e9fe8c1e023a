#include <doctest.h>

#include "../support/printers.hpp"
#include "../support/random_series.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/error.hpp"
#include "riordan/numerator.hpp"

using riordan::Poly;
using riordan::Rational;
using riordan::Series;

namespace {

// Brute force: sum_k w(k) [x^n] b a^k x^k times (1-x)^{n+1} (or ^{2n+1}),
// cut at degree n.
Poly brute_numerator(const Series& b, const Series& a, std::size_t n, bool exponential) {
  const std::size_t terms = 2 * n + 2;
  Poly row(terms);
  Series power = b.truncated(n);
  for (std::size_t k = 0; k <= terms; ++k) {
    Rational c = power[n];
    if (exponential) c *= riordan::rising(Rational(static_cast<long>(k + 1)), static_cast<long>(n));
    row.at(k) = c;
    power = power * a.truncated(n);
  }
  Poly window = Poly{1, -1}.pow(exponential ? 2 * n + 1 : n + 1) * row;
  Poly out(n);
  for (std::size_t k = 0; k <= n; ++k) out.at(k) = window[k];
  return out;
}

Series catalan(std::size_t order) {
  Series g = Series::x(order + 1) - Series::x(order + 1) * Series::x(order + 1);
  return riordan::reversion(g).over_x();
}

}  // namespace

TEST_CASE("euler numerator of exp(x) is the eulerian polynomial over n!") {
  Series e = riordan::exp_series(Series::x(12));
  for (long n = 1; n <= 6; ++n) {
    auto r = riordan::euler_numerator(Series::constant(1, 12), e, n);
    CHECK(r.poly == riordan::eulerian(n) * riordan::factorial(n).inverse());
    CHECK(r.residual_checked >= r.poly.bound());
  }
}

TEST_CASE("narayana numerators of 1/(1-x)") {
  Series g = Series::geometric(1, 12);
  auto r = riordan::narayana_numerator(Series::constant(1, 12), g, 2);
  CHECK(r.poly == Poly{0, 6, 6});
  // h_n = (n+1)! N_n with N_n(x) = sum (1/n) C(n,m) C(n,m-1) x^m.
  for (long n = 1; n <= 5; ++n) {
    Poly expected(n);
    for (long m = 1; m <= n; ++m) {
      expected.at(m) = riordan::factorial(n + 1) * riordan::binom(n, m) * riordan::binom(n, m - 1) / Rational(n);
    }
    CHECK(riordan::phi_poly(g, n) == expected);
  }
}

TEST_CASE("alpha of 1 + x is x^n and phi of the catalan series is ((2n)!/n!) x") {
  Series a = Series::constant(1, 12) + Series::x(12);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(riordan::alpha_poly(a, n) == Poly::monomial(n));
  Series c = catalan(12);
  for (long n = 1; n <= 5; ++n) {
    CHECK(riordan::phi_poly(c, n) == Poly::monomial(1, riordan::factorial(2 * n) / riordan::factorial(n)));
  }
}

TEST_CASE("numerators agree with a brute-force window") {
  riordan::testing::SeriesGen gen(41);
  for (int trial = 0; trial < 8; ++trial) {
    Series b = gen.invertible_series(10), a = gen.unit_series(10);
    for (std::size_t n = 0; n <= 5; ++n) {
      CAPTURE(trial);
      CAPTURE(n);
      CHECK(riordan::euler_numerator(b, a, n).poly == brute_numerator(b, a, n, false));
      CHECK(riordan::narayana_numerator(b, a, n).poly == brute_numerator(b, a, n, true));
    }
  }
}

TEST_CASE("preconditions") {
  Series bad = Series::constant(2, 8) + Series::x(8);
  Series one = Series::constant(1, 8);
  CHECK_THROWS_AS(riordan::euler_numerator(one, bad, 2), riordan::DomainError);
  CHECK_THROWS_AS(riordan::euler_numerator(Series(8), one, 2), riordan::DomainError);
  CHECK_THROWS_AS(riordan::narayana_numerator(one, one, 9), riordan::RangeError);
}

TEST_CASE("bivariate generating functions") {
  riordan::testing::SeriesGen gen(42);
  for (int trial = 0; trial < 3; ++trial) {
    Series a = gen.unit_series(10);
    CHECK(riordan::alpha_gf_check(a, 8, 6));
    CHECK(riordan::phi_gf_check(a, 8, 6));
  }
}
