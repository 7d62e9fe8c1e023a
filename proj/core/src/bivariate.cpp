#include "riordan/bivariate.hpp"

#include <algorithm>

#include "riordan/error.hpp"

namespace riordan {

BiSeries::BiSeries(std::size_t order_x, std::size_t order_t) : rows_(order_x + 1, Series(order_t)) {}

BiSeries BiSeries::from_x(const Series& s, std::size_t order_t) {
  BiSeries out(s.order(), order_t);
  for (std::size_t i = 0; i <= s.order(); ++i) out.rows_[i] = Series::constant(s[i], order_t);
  return out;
}

BiSeries BiSeries::from_t(const Series& s, std::size_t order_x) {
  BiSeries out(order_x, s.order());
  out.rows_[0] = s;
  return out;
}

BiSeries BiSeries::from_rows(const std::vector<Poly>& rows, std::size_t order_x, std::size_t order_t) {
  BiSeries out(order_x, order_t);
  for (std::size_t i = 0; i <= order_x && i < rows.size(); ++i) out.rows_[i] = Series::from_poly(rows[i], order_t);
  return out;
}

BiSeries& BiSeries::operator+=(const BiSeries& rhs) {
  rows_.resize(std::min(rows_.size(), rhs.rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] += rhs.rows_[i];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& rhs) {
  rows_.resize(std::min(rows_.size(), rhs.rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] -= rhs.rows_[i];
  return *this;
}

BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs) {
  const std::size_t nx = std::min(lhs.order_x(), rhs.order_x());
  const std::size_t nt = std::min(lhs.order_t(), rhs.order_t());
  BiSeries out(nx, nt);
  for (std::size_t i = 0; i <= nx; ++i) {
    for (std::size_t j = 0; i + j <= nx; ++j) out.rows_[i + j] += lhs.rows_[i] * rhs.rows_[j];
  }
  return out;
}

BiSeries operator/(const BiSeries& lhs, const BiSeries& rhs) {
  const std::size_t nx = std::min(lhs.order_x(), rhs.order_x());
  const std::size_t nt = std::min(lhs.order_t(), rhs.order_t());
  const Series one = Series::constant(1, nt);
  const Series inv0 = one / rhs.rows_[0].truncated(nt);
  BiSeries out(nx, nt);
  for (std::size_t i = 0; i <= nx; ++i) {
    Series c = lhs.rows_[i].truncated(nt);
    for (std::size_t k = 1; k <= i; ++k) c -= rhs.rows_[k] * out.rows_[i - k];
    out.rows_[i] = c * inv0;
  }
  return out;
}

BiSeries compose_x(const Series& a, const BiSeries& s) {
  const std::size_t nx = std::min(a.order(), s.order_x());
  const std::size_t nt = s.order_t();
  // x * s(x, t), truncated to order nx in x.
  BiSeries xs(nx, nt);
  for (std::size_t i = 1; i <= nx; ++i) xs.rows_[i] = s.rows_[i - 1];
  BiSeries acc = BiSeries::from_t(Series::constant(a[nx], nt), nx);
  for (std::size_t k = nx; k-- > 0;) {
    acc = acc * xs;
    acc.rows_[0].at(0) += a[k];
  }
  return acc;
}

bool operator==(const BiSeries& lhs, const BiSeries& rhs) {
  const std::size_t n = std::min(lhs.rows_.size(), rhs.rows_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lhs.rows_[i] == rhs.rows_[i])) return false;
  }
  return true;
}

}  // namespace riordan
