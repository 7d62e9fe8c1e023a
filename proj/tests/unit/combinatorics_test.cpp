#include <doctest.h>

#include <vector>

#include "../support/printers.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/error.hpp"

using riordan::Poly;
using riordan::Rational;

TEST_CASE("binomial coefficients at rational arguments") {
  CHECK(riordan::binom(5, 2) == Rational(10));
  CHECK(riordan::binom(5, 7) == Rational(0));
  CHECK(riordan::binom(-1, 3) == Rational(-1));
  CHECK(riordan::binom(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(riordan::binom(Rational(7, 3), 0) == Rational(1));
  CHECK(riordan::binom(4, -1) == Rational(0));
}

TEST_CASE("pascal rule holds for rational upper arguments") {
  for (const Rational phi : {Rational(-2), Rational(1, 3), Rational(-5, 2), Rational(6)}) {
    for (long k = 1; k <= 8; ++k) {
      CHECK(riordan::binom(phi + 1, k) == riordan::binom(phi, k) + riordan::binom(phi, k - 1));
    }
  }
}

TEST_CASE("falling and rising factorials") {
  CHECK(riordan::falling(5, 3) == Rational(60));
  CHECK(riordan::rising(5, 3) == Rational(210));
  CHECK(riordan::falling(Rational(1, 2), 2) == Rational(-1, 4));
  CHECK(riordan::factorial(10) == Rational(3628800));
  for (long n = 0; n <= 6; ++n) {
    CHECK(riordan::rising(3, n) == riordan::falling(Rational(3 + n - 1), n));
    CHECK(riordan::falling_poly(n, 2).eval(5) == riordan::falling(7, n));
    CHECK(riordan::rising_poly(n, -1).eval(4) == riordan::rising(3, n));
  }
}

TEST_CASE("stirling numbers follow their recurrences") {
  // Independent tables built from s(n,m) = s(n-1,m-1) - (n-1) s(n-1,m)
  // and S(n,m) = S(n-1,m-1) + m S(n-1,m).
  const long N = 9;
  std::vector<std::vector<Rational>> s1(N + 1, std::vector<Rational>(N + 1)), s2 = s1;
  s1[0][0] = 1;
  s2[0][0] = 1;
  for (long n = 1; n <= N; ++n) {
    for (long m = 1; m <= n; ++m) {
      s1[n][m] = s1[n - 1][m - 1] - Rational(n - 1) * s1[n - 1][m];
      s2[n][m] = s2[n - 1][m - 1] + Rational(m) * s2[n - 1][m];
    }
  }
  for (long n = 0; n <= N; ++n) {
    for (long m = 0; m <= n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(riordan::stirling1(n, m) == s1[n][m]);
      CHECK(riordan::stirling2(n, m) == s2[n][m]);
    }
  }
  CHECK_THROWS_AS(riordan::stirling2(2, 3), riordan::DomainError);
}

TEST_CASE("eulerian polynomials") {
  CHECK(riordan::eulerian(0) == Poly{1});
  CHECK(riordan::eulerian(1) == Poly{0, 1});
  CHECK(riordan::eulerian(2) == Poly{0, 1, 1});
  CHECK(riordan::eulerian(3) == Poly{0, 1, 4, 1});
  CHECK(riordan::eulerian(4) == Poly{0, 1, 11, 11, 1});
  for (long p = 1; p <= 8; ++p) {
    CHECK(riordan::eulerian(p).eval(1) == riordan::factorial(p));
  }
}
