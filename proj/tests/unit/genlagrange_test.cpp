#include <doctest.h>

#include "../support/printers.hpp"
#include "../support/random_series.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/error.hpp"
#include "riordan/genlagrange.hpp"
#include "riordan/numerator.hpp"

using riordan::BetaKind;
using riordan::FinMatrix;
using riordan::Poly;
using riordan::Rational;
using riordan::Series;

namespace {

constexpr std::size_t N = 10;

Series one() { return Series::constant(1, N); }
Series x() { return Series::x(N); }

const Rational kBetas[] = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 3),
                           Rational(1, 2), Rational(1), Rational(2), Rational(3)};

}  // namespace

TEST_CASE("generalized binomial series special cases") {
  CHECK(riordan::gen_binomial_series(0, 3, N) == riordan::pow_series(one() + x(), 3));
  CHECK(riordan::gen_binomial_series(1, 1, N) == Series::geometric(1, N));
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
  Series c = riordan::gen_binomial_series(2, 1, 6);
  for (std::size_t k = 0; k <= 6; ++k) CHECK(c[k] == Rational(catalan[k]));
  Series h = riordan::gen_binomial_series(Rational(1, 2), 1, 3);
  CHECK(h == Series(std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 8)}));
}

TEST_CASE("powers of the generalized binomial series") {
  for (const Rational beta : {Rational(2), Rational(1, 3), Rational(-3, 2), Rational(3)}) {
    Series base = riordan::gen_binomial_series(beta, 1, 8);
    for (const Rational phi : {Rational(2), Rational(-1, 2), Rational(5, 3)}) {
      CHECK(riordan::gen_binomial_series(beta, phi, 8) == riordan::pow_series(base, phi));
    }
  }
}

TEST_CASE("poles of the generalized binomial series") {
  CHECK_THROWS_AS(riordan::gen_binomial_series(-1, 1, 4), riordan::PoleError);
  CHECK_THROWS_AS(riordan::gen_binomial_series(Rational(-1, 2), 1, 4), riordan::PoleError);
  CHECK_NOTHROW(riordan::gen_binomial_series(Rational(-1, 2), 1, 1));
  CHECK_THROWS_AS(riordan::gen_binomial_series(0, 0, 4), riordan::PoleError);
  CHECK(riordan::gen_binomial_series(2, 0, 4) == Series::constant(1, 4));
}

TEST_CASE("generalized lagrange series") {
  riordan::testing::SeriesGen gen(61);
  for (const Rational beta : kBetas) {
    Series a = gen.unit_series(N);
    Series l = riordan::gen_lagrange_series(a, beta, N);
    CHECK(l == riordan::compose(a, x() * riordan::pow_series(l, beta)));
    if (!(beta == Rational(-1)) && !(beta == Rational(-1, 2))) {
      CHECK(riordan::gen_lagrange_series(one() + x(), beta, N) == riordan::gen_binomial_series(beta, 1, N));
    }
  }
  CHECK_THROWS_AS(riordan::gen_lagrange_series(one(), 2, N + 1), riordan::RangeError);
}

TEST_CASE("t polynomials") {
  auto t = riordan::t_poly(3, 2, 4);
  CHECK(t.poly == Poly{4, 12, 4, 0});  // C(2,m) C(4,3-m)
  CHECK(t.n == 3);
}

TEST_CASE("closed forms against numerator extraction") {
  for (const Rational beta : {Rational(1, 3), Rational(1), Rational(2), Rational(3)}) {
    Series a = riordan::gen_binomial_series(beta, 1, 12);
    for (std::size_t n = 1; n <= 5; ++n) {
      CAPTURE(n);
      CHECK(riordan::beta_alpha_closed(n, beta) == riordan::alpha_poly(a, n));
      CHECK(riordan::beta_phi_closed(n, beta) == riordan::phi_poly(a, n));
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) CHECK(riordan::beta_alpha_closed(n, 0) == Poly::monomial(n));
  CHECK_THROWS_AS(riordan::beta_alpha_closed(0, 1), riordan::DomainError);
}

TEST_CASE("beta matrices: closed form equals conjugation") {
  for (const Rational beta : kBetas) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (BetaKind k : {BetaKind::G, BetaKind::H, BetaKind::A, BetaKind::T, BetaKind::X}) {
        CHECK(riordan::beta_closed(k, n, beta) == riordan::beta_conjugated(k, n, beta));
      }
    }
  }
  CHECK(riordan::beta_matrix(BetaKind::X, 4, 0).pow(5) == FinMatrix(5, 5));
}

TEST_CASE("u and q transforms") {
  // u = (x)_3, n beta = 2: (x/(x+2)) (x+2)(x+1)x = x^2 (x+1).
  CHECK(riordan::beta_u_transform(riordan::falling_poly(3), 2, 1) == Poly{0, 0, 1, 1});
  Series q = riordan::exp_series(x()) - one();
  Series tq = riordan::beta_q_transform(q, 1, 2);
  Series d = one() + 2 * x();
  Series expected = riordan::compose(q, x() / d) / d;
  CHECK(tq == expected);
}
