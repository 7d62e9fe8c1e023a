#pragma once

#include <cstddef>
#include <vector>

#include "riordan/poly.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// Truncated bivariate series sum c_{ij} x^i t^j, stored as a series in x
/// whose coefficients are series in t.
class BiSeries {
 public:
  BiSeries(std::size_t order_x, std::size_t order_t);

  /// A series in x alone.
  static BiSeries from_x(const Series& s, std::size_t order_t);
  /// A series in t alone.
  static BiSeries from_t(const Series& s, std::size_t order_x);
  /// sum_i p_i(t) x^i from polynomials in t.
  static BiSeries from_rows(const std::vector<Poly>& rows, std::size_t order_x, std::size_t order_t);

  std::size_t order_x() const { return rows_.size() - 1; }
  std::size_t order_t() const { return rows_.front().order(); }

  /// Coefficient of x^i as a series in t.
  const Series& row(std::size_t i) const { return rows_.at(i); }
  Rational coeff(std::size_t i, std::size_t j) const { return rows_.at(i)[j]; }

  BiSeries& operator+=(const BiSeries& rhs);
  BiSeries& operator-=(const BiSeries& rhs);
  friend BiSeries operator+(BiSeries lhs, const BiSeries& rhs) { return lhs += rhs; }
  friend BiSeries operator-(BiSeries lhs, const BiSeries& rhs) { return lhs -= rhs; }
  friend BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs);
  /// Requires the x^0 t^0 coefficient of rhs to be nonzero.
  friend BiSeries operator/(const BiSeries& lhs, const BiSeries& rhs);

  /// a(x) -> a(x s(x, t)).
  friend BiSeries compose_x(const Series& a, const BiSeries& s);

  friend bool operator==(const BiSeries& lhs, const BiSeries& rhs);

 private:
  explicit BiSeries(std::vector<Series> rows) : rows_(std::move(rows)) {}
  std::vector<Series> rows_;
};

}  // namespace riordan
