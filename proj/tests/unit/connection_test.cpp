#include <doctest.h>

#include <vector>

#include "../support/printers.hpp"
#include "../support/random_series.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/connection.hpp"
#include "riordan/error.hpp"

using riordan::CoreKind;
using riordan::ExpKind;
using riordan::FinMatrix;
using riordan::Poly;
using riordan::Rational;
using riordan::Series;
using riordan::TildeKind;

namespace {

FinMatrix mat(std::initializer_list<std::initializer_list<long>> rows, Rational scale = 1) {
  std::vector<std::vector<Rational>> out;
  for (auto r : rows) {
    out.emplace_back();
    for (long v : r) out.back().push_back(scale * Rational(v));
  }
  return FinMatrix(out);
}

}  // namespace

TEST_CASE("matrix basics") {
  FinMatrix m = mat({{2, 1}, {1, 1}});
  CHECK(m * m.inverse() == FinMatrix::identity(2));
  CHECK(m.pow(-2) * m.pow(2) == FinMatrix::identity(2));
  CHECK(m.pow(3) == m * m * m);
  CHECK(m.transpose() == m);
  CHECK(m.apply(Poly{1, 1}) == Poly{3, 2});
  CHECK(m.column(0) == Poly{2, 1});
  CHECK(m.column_sums() == std::vector<Rational>{3, 2});
  CHECK(FinMatrix::from_columns({Poly{1}, Poly{0, 1}}, 2) == FinMatrix::identity(2));
  CHECK_THROWS_AS(mat({{1, 2}, {2, 4}}).inverse(), riordan::DomainError);
  CHECK_THROWS_AS(m * FinMatrix(3, 3), riordan::DomainError);
}

TEST_CASE("U, V, J and their inverses") {
  CHECK(riordan::core_matrix(CoreKind::U, 2) == mat({{1, 0, 0}, {-2, 1, 1}, {1, -1, 1}}, Rational(1, 2)));
  CHECK(riordan::core_matrix(CoreKind::Uinv, 3) ==
        mat({{6, 0, 0, 0}, {11, 2, -1, 2}, {6, 3, 0, -3}, {1, 1, 1, 1}}));
  CHECK(riordan::core_matrix(CoreKind::V, 3) == mat({{1, 0, 0, 0}, {3, 1, 0, 0}, {3, 2, 1, 0}, {1, 1, 1, 1}}));
  for (std::size_t n = 0; n <= 7; ++n) {
    const FinMatrix id = FinMatrix::identity(n + 1);
    CHECK(riordan::core_matrix(CoreKind::U, n) * riordan::core_matrix(CoreKind::Uinv, n) == id);
    CHECK(riordan::core_matrix(CoreKind::V, n) * riordan::core_matrix(CoreKind::Vinv, n) == id);
    CHECK(riordan::core_matrix(CoreKind::J, n).pow(2) == id);
    CHECK(riordan::core_matrix(CoreKind::I, n) == id);
  }
}

TEST_CASE("shift and reflection act on polynomials") {
  riordan::testing::SeriesGen gen(51);
  for (int trial = 0; trial < 10; ++trial) {
    Poly c = gen.poly(5);
    Rational phi = gen.rational();
    CHECK(riordan::shift_matrix(5, phi).apply(c) == c.shifted(phi));
    CHECK(riordan::reflect_matrix(5).apply(c) == c.reflected());
  }
}

TEST_CASE("riordan_matrix windows the array") {
  FinMatrix p = riordan::riordan_matrix(riordan::RiordanArray::pascal(1, 6), 5);
  for (long r = 0; r < 5; ++r) {
    for (long c = 0; c < 5; ++c) CHECK(p(r, c) == riordan::binom(r, c));
  }
}

TEST_CASE("F, S and C") {
  CHECK(riordan::exp_matrix(ExpKind::F, 2) == mat({{1, 0, 0}, {-2, 3, 3}, {1, -3, 9}}));
  CHECK(riordan::exp_matrix(ExpKind::S, 3) ==
        mat({{1, 0, 0, 0}, {9, 4, 0, 0}, {9, 12, 10, 0}, {1, 4, 10, 20}}, 6));
  for (std::size_t n = 0; n <= 6; ++n) {
    const FinMatrix id = FinMatrix::identity(n + 1);
    CHECK(riordan::exp_matrix(ExpKind::F, n) * riordan::exp_matrix(ExpKind::Finv, n) == id);
    CHECK(riordan::exp_matrix(ExpKind::S, n) * riordan::exp_matrix(ExpKind::Sinv, n) == id);
    CHECK(riordan::s_closed(n) == riordan::exp_matrix(ExpKind::F, n) * riordan::core_matrix(CoreKind::Uinv, n));
    // S x^0 = n! sum C(n,m)^2 x^m.
    Poly col(n);
    for (long m = 0; m <= static_cast<long>(n); ++m) {
      col.at(m) = riordan::factorial(n) * pow(riordan::binom(n, m), 2);
    }
    CHECK(riordan::exp_matrix(ExpKind::S, n).column(0) == col);
    FinMatrix c = riordan::exp_matrix(ExpKind::C, n);
    for (long p = 0; p <= static_cast<long>(n); ++p) {
      CHECK(c(p, p) == riordan::factorial(n + p) / riordan::factorial(p));
    }
  }
}

TEST_CASE("tilde family") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const FinMatrix id = FinMatrix::identity(n);
    CHECK(riordan::tilde_matrix(TildeKind::Ut, n) * riordan::tilde_matrix(TildeKind::Utinv, n) == id);
    CHECK(riordan::tilde_matrix(TildeKind::Ft, n) * riordan::tilde_matrix(TildeKind::Ftinv, n) == id);
    FinMatrix f = riordan::exp_matrix(ExpKind::F, n);
    FinMatrix ft = riordan::tilde_matrix(TildeKind::Ft, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) CHECK(ft(r, c) == f(r + 1, c + 1));
    }
    CHECK(riordan::tilde_matrix(TildeKind::Vt, n) == riordan::core_matrix(CoreKind::V, n - 1));
    CHECK(riordan::tilde_matrix(TildeKind::St, n) ==
          ft * riordan::tilde_matrix(TildeKind::Utinv, n));
  }
  CHECK_THROWS_AS(riordan::tilde_matrix(TildeKind::Ut, 0), riordan::DomainError);
}

TEST_CASE("amazing matrices") {
  CHECK(riordan::amazing_matrix(3, 2) == mat({{4, 1, 0}, {4, 6, 4}, {0, 1, 4}}));
  CHECK(riordan::amazing_matrix(2, 3) == mat({{6, 3}, {3, 6}}));
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      CHECK(riordan::amazing_matrix(n, m) == riordan::amazing_conjugated(n, m));
    }
  }
}

TEST_CASE("strided matrices") {
  Series a = riordan::pow_series(Series::constant(1, 6) + Series::x(6), 4);
  FinMatrix s = riordan::strided_matrix(a, 2, 3);
  CHECK(s == mat({{4, 1, 0}, {4, 6, 4}, {0, 1, 4}}));
  CHECK_THROWS_AS(riordan::strided_matrix(a.truncated(4), 2, 3), riordan::RangeError);
}
