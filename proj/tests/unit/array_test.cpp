#include <doctest.h>

#include <vector>

#include "../support/printers.hpp"
#include "../support/random_series.hpp"
#include "riordan/array.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/error.hpp"

using riordan::Flavor;
using riordan::Rational;
using riordan::RiordanArray;
using riordan::Series;
using riordan::SliceKind;

namespace {

constexpr std::size_t N = 8;

Series one() { return Series::constant(1, N); }
Series x() { return Series::x(N); }

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Series catalan(std::size_t order) {
  // x C = reversion of x - x^2.
  Series xc = riordan::reversion(Series::x(order + 1) - Series::x(order + 1) * Series::x(order + 1));
  return xc.over_x();
}

// Diagonal re-reading: sum_j [x^j] b a^{phi (k + v j)} x^j.
Series diagonal_oracle(const Series& b, const Series& a, const Rational& phi, long v, long k) {
  Series out(N);
  for (std::size_t j = 0; j <= N; ++j) {
    Rational e = phi * Rational(k + v * static_cast<long>(j));
    out.at(j) = (b * riordan::pow_series(a, e))[j];
  }
  return out;
}

}  // namespace

TEST_CASE("pascal rows and the exponential bridge") {
  RiordanArray p = RiordanArray::pascal(1, N);
  CHECK(p.materialize(SliceKind::Row, 3).entries == ints({1, 3, 3, 1}));
  RiordanArray pe(riordan::exp_series(x()), x(), Flavor::Exponential);
  CHECK(pe.materialize(SliceKind::Row, 3).entries == ints({1, 3, 3, 1}));
  riordan::testing::SeriesGen gen(31);
  for (int trial = 0; trial < 5; ++trial) {
    Series f = gen.invertible_series(N), g = gen.reversible_series(N);
    RiordanArray o(f, g), e(f, g, Flavor::Exponential);
    for (std::size_t n = 0; n <= N; ++n) {
      for (std::size_t m = 0; m <= n; ++m) {
        CHECK(e.entry(n, m) == o.entry(n, m) * riordan::factorial(static_cast<long>(n)) /
                                   riordan::factorial(static_cast<long>(m)));
      }
    }
  }
}

TEST_CASE("the ((xC)', xC) triangle") {
  Series xc = catalan(N + 1).times_x().truncated(N + 1);
  RiordanArray r(xc.derivative(), xc.truncated(N));
  CHECK(r.materialize(SliceKind::Row, 0).entries == ints({1}));
  CHECK(r.materialize(SliceKind::Row, 1).entries == ints({2, 1}));
  CHECK(r.materialize(SliceKind::Row, 2).entries == ints({6, 3, 1}));
  CHECK(r.materialize(SliceKind::Row, 3).entries == ints({20, 10, 4, 1}));
}

TEST_CASE("slices") {
  RiordanArray p = RiordanArray::pascal(1, N);
  auto col = p.materialize(SliceKind::Column, 2);
  CHECK(col.entries.size() == N + 1);
  CHECK(col.entries[4] == Rational(6));
  auto diag = p.materialize(SliceKind::Diagonal, 1);
  CHECK(diag.entries[3] == Rational(4));  // entry (4, 3)
  CHECK_THROWS_AS(p.materialize(SliceKind::Row, N + 1), riordan::RangeError);
}

TEST_CASE("square rows are diagonals of (b, x a)") {
  riordan::testing::SeriesGen gen(32);
  for (int trial = 0; trial < 5; ++trial) {
    Series b = gen.invertible_series(N), a = gen.unit_series(N);
    RiordanArray sq(b, a, Flavor::Square);
    RiordanArray tri(b, a.times_x().truncated(N));
    for (std::size_t n = 0; n <= 4; ++n) {
      auto row = sq.materialize(SliceKind::Row, n).entries;
      auto diag = tri.materialize(SliceKind::Diagonal, n).entries;
      for (std::size_t k = 0; k + n <= N; ++k) CHECK(row[k] == diag[k]);
    }
  }
  CHECK_THROWS_AS(RiordanArray(one(), one() * Rational(2), Flavor::Square), riordan::DomainError);
}

TEST_CASE("group law") {
  RiordanArray p = RiordanArray::pascal(1, N);
  RiordanArray p2 = riordan::riordan_mul(p, p);
  CHECK(p2.f() == Series::geometric(2, N));
  CHECK(p2.g() == x() * Series::geometric(2, N));
  RiordanArray pinv = riordan::riordan_inverse(p);
  CHECK(pinv.f() == Series::geometric(-1, N));
  CHECK(pinv.g() == x() * Series::geometric(-1, N));

  RiordanArray c = riordan::riordan_inverse(RiordanArray(one(), x() - x() * x()));
  CHECK(c.g().over_x() == catalan(N).truncated(N - 1));

  riordan::testing::SeriesGen gen(33);
  const RiordanArray id = RiordanArray::identity(N);
  for (int trial = 0; trial < 10; ++trial) {
    RiordanArray a(gen.invertible_series(N), gen.reversible_series(N));
    RiordanArray b(gen.invertible_series(N), gen.reversible_series(N));
    RiordanArray d(gen.invertible_series(N), gen.reversible_series(N));
    RiordanArray lhs = riordan::riordan_mul(riordan::riordan_mul(a, b), d);
    RiordanArray rhs = riordan::riordan_mul(a, riordan::riordan_mul(b, d));
    CHECK(lhs.f() == rhs.f());
    CHECK(lhs.g() == rhs.g());
    RiordanArray e = riordan::riordan_mul(a, riordan::riordan_inverse(a));
    CHECK(e.f() == id.f());
    CHECK(e.g() == id.g());
  }
  CHECK_THROWS_AS(riordan::riordan_mul(p, RiordanArray::identity(N, Flavor::Exponential)), riordan::DomainError);
  CHECK_THROWS_AS(riordan::riordan_inverse(RiordanArray(one(), x() * x())), riordan::DomainError);
}

TEST_CASE("sheffer rows") {
  RiordanArray pe(riordan::exp_series(x()), x(), Flavor::Exponential);
  CHECK(riordan::sheffer_row(pe, 2) == riordan::Poly{1, 2, 1});
  RiordanArray lg(one(), riordan::log_series(Series::geometric(1, N)), Flavor::Exponential);
  for (long n = 0; n <= 6; ++n) CHECK(riordan::sheffer_row(lg, n) == riordan::rising_poly(n));
}

TEST_CASE("lagrange pairs") {
  CHECK(riordan::lagrange_pair(one() + x()) == Series::geometric(1, N - 1));
  CHECK(riordan::lagrange_pair(one() - x()) == Series::geometric(-1, N - 1));
  Series b = riordan::lagrange_pair(riordan::exp_series(x()));
  for (long n = 0; n + 1 <= static_cast<long>(b.order()); ++n) {
    CHECK(b[n] == pow(Rational(n + 1), n - 1) / riordan::factorial(n));
  }
  CHECK_THROWS_AS(riordan::lagrange_pair(one() * Rational(2)), riordan::DomainError);
}

TEST_CASE("generalized lagrange series") {
  CHECK(riordan::generalized_lagrange(one() + x(), 2) == catalan(N));
  CHECK(riordan::generalized_lagrange(one() + x(), 1) == Series::geometric(1, N));
  riordan::testing::SeriesGen gen(34);
  for (const Rational beta : {Rational(-2), Rational(-1, 2), Rational(1, 3), Rational(3)}) {
    Series a = gen.unit_series(N);
    Series l = riordan::generalized_lagrange(a, beta);
    CHECK(l == riordan::compose(a, x() * riordan::pow_series(l, beta)));
  }
}

TEST_CASE("table rows read off diagonals") {
  riordan::testing::SeriesGen gen(35);
  CHECK(riordan::table_row(one(), one() - x(), -1, 1, 0) == diagonal_oracle(one(), one() - x(), -1, 1, 0));
  for (int trial = 0; trial < 4; ++trial) {
    Series b = gen.invertible_series(N), a = gen.unit_series(N);
    for (const Rational phi : {Rational(1), Rational(1, 2), Rational(-1), Rational(3, 2)}) {
      for (long v : {-2L, -1L, 0L, 1L, 2L}) {
        for (long k : {-3L, 0L, 2L}) {
          CAPTURE(v);
          CAPTURE(k);
          CHECK(riordan::table_row(b, a, phi, v, k) == diagonal_oracle(b, a, phi, v, k));
        }
      }
    }
  }
}

TEST_CASE("table rows round-trip through v and -v") {
  riordan::testing::SeriesGen gen(36);
  for (int trial = 0; trial < 5; ++trial) {
    Series b = gen.invertible_series(N), a = gen.unit_series(N);
    const Rational phi(2, 3);
    Series l = riordan::generalized_lagrange(a, phi);
    Series b1 = riordan::table_row(b, a, phi, 1, 0);
    for (long k : {-2L, 1L, 3L}) {
      CHECK(riordan::table_row(b1, l, phi, -1, k) == b * riordan::pow_series(a, phi * Rational(k)));
    }
  }
}
