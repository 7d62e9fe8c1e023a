#include <doctest.h>

#include "../support/random_series.hpp"
#include "riordan/bivariate.hpp"
#include "riordan/error.hpp"

using riordan::BiSeries;
using riordan::Poly;
using riordan::Rational;
using riordan::Series;

namespace {

BiSeries random_bi(riordan::testing::SeriesGen& gen, std::size_t ox, std::size_t ot, bool unit) {
  std::vector<Poly> rows;
  for (std::size_t i = 0; i <= ox; ++i) rows.push_back(gen.poly(ot));
  if (unit) rows[0].at(0) = 1;
  return BiSeries::from_rows(rows, ox, ot);
}

}  // namespace

TEST_CASE("product matches the double convolution") {
  riordan::testing::SeriesGen gen(71);
  BiSeries a = random_bi(gen, 4, 3, false), b = random_bi(gen, 4, 3, false);
  BiSeries p = a * b;
  for (std::size_t i = 0; i <= 4; ++i) {
    for (std::size_t j = 0; j <= 3; ++j) {
      Rational c;
      for (std::size_t i1 = 0; i1 <= i; ++i1) {
        for (std::size_t j1 = 0; j1 <= j; ++j1) c += a.coeff(i1, j1) * b.coeff(i - i1, j - j1);
      }
      CHECK(p.coeff(i, j) == c);
    }
  }
}

TEST_CASE("division inverts multiplication") {
  riordan::testing::SeriesGen gen(72);
  for (int trial = 0; trial < 5; ++trial) {
    BiSeries a = random_bi(gen, 6, 5, false), b = random_bi(gen, 6, 5, true);
    CHECK((a * b) / b == a);
    CHECK((a / b) * b == a);
  }
  CHECK_THROWS_AS(BiSeries(3, 3) / BiSeries(3, 3), riordan::DomainError);
}

TEST_CASE("single-variable embeddings") {
  Series s = Series::geometric(2, 5);
  BiSeries bx = BiSeries::from_x(s, 3), bt = BiSeries::from_t(s, 4);
  CHECK(bx.coeff(3, 0) == Rational(8));
  CHECK(bx.coeff(3, 1).is_zero());
  CHECK(bt.coeff(0, 3) == Rational(8));
  CHECK(bt.coeff(1, 0).is_zero());
  CHECK(bx.order_x() == 5);
  CHECK(bt.order_t() == 5);
}

TEST_CASE("composition in x") {
  // 1/(1 - x s) with s = t: sum x^i t^i.
  BiSeries s = BiSeries::from_t(Series::x(6), 6);
  BiSeries c = compose_x(Series::geometric(1, 6), s);
  for (std::size_t i = 0; i <= 6; ++i) {
    for (std::size_t j = 0; j <= 6; ++j) CHECK(c.coeff(i, j) == Rational(i == j ? 1 : 0));
  }
}
