#include <doctest.h>

#include "../support/printers.hpp"
#include "../support/random_series.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/error.hpp"
#include "riordan/poly.hpp"

using riordan::Poly;
using riordan::Rational;

namespace {

// c(x + phi) expanded term by term with binomial coefficients.
Poly naive_shift(const Poly& c, const Rational& phi) {
  Poly out(c.bound());
  for (std::size_t k = 0; k <= c.bound(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      out.at(j) += c[k] * riordan::binom(Rational(static_cast<long>(k)), static_cast<long>(j)) *
                   pow(phi, static_cast<long>(k - j));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("degree and bound are independent") {
  Poly p{0, 1, 0, 0};
  CHECK(p.bound() == 3);
  CHECK(p.degree() == 1);
  CHECK(Poly(4).degree() == -1);
  CHECK(p == Poly::monomial(1));
  CHECK(p.trimmed().bound() == 1);
}

TEST_CASE("with_bound refuses to drop coefficients") {
  Poly p{1, 2, 3};
  CHECK(p.with_bound(5).bound() == 5);
  CHECK_THROWS_AS(p.with_bound(1), riordan::RangeError);
}

TEST_CASE("reversal is taken relative to the bound") {
  Poly p = Poly{1, 2}.with_bound(3);
  CHECK(p.reversed() == Poly{0, 0, 2, 1});
  CHECK(p.reversed().reversed() == p);
}

TEST_CASE("evaluation and arithmetic") {
  Poly p{1, -3, 2};  // (1 - x)(1 - 2x)
  CHECK(p.eval(1).is_zero());
  CHECK(p.eval(Rational(1, 2)).is_zero());
  CHECK(p.eval(3) == Rational(10));
  CHECK(Poly{1, -1} * Poly{1, -2} == p);
  CHECK((p - p).is_zero());
  CHECK(Poly{1, 1}.pow(3) == Poly{1, 3, 3, 1});
  CHECK(p.derivative() == Poly{-3, 4});
  CHECK(p.reflected() == Poly{1, 3, 2});
  CHECK(p.scaled_arg(2) == Poly{1, -6, 8});
  CHECK(Poly{1, 2}.times_x(2) == Poly{0, 0, 1, 2});
  CHECK(Poly::linear(5) == Poly{5, 1});
}

TEST_CASE("composition") {
  // (1 + x)^2 at q = x^2 - 1 is x^4.
  CHECK(Poly{1, 2, 1}.compose(Poly{-1, 0, 1}) == Poly::monomial(4));
}

TEST_CASE("exact division") {
  Poly p = Poly{1, -1} * Poly{2, 5, 1};
  CHECK(p.divide_exact(Poly{1, -1}) == Poly{2, 5, 1});
  CHECK_THROWS_AS(p.divide_exact(Poly{3, 1}), riordan::ConsistencyError);
}

TEST_CASE("taylor shift matches the binomial expansion") {
  riordan::testing::SeriesGen gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    Poly c = gen.poly(gen.index(0, 7));
    Rational phi = gen.rational(5, 4);
    CAPTURE(trial);
    CHECK(c.shifted(phi) == naive_shift(c, phi));
    CHECK(c.shifted(phi).shifted(-phi) == c);
  }
}

TEST_CASE("string form") {
  CHECK(Poly{0, 1, 4, 1}.str() == "x + 4*x^2 + x^3");
  CHECK(Poly{Rational(1, 2), -1}.str() == "1/2 - x");
  CHECK(Poly(3).str() == "0");
}
