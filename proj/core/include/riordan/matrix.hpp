#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "riordan/poly.hpp"
#include "riordan/rational.hpp"

namespace riordan {

/// Dense exact matrix. An order-n operator matrix acts on the coefficient
/// column of a polynomial with bound n-1: column p holds the image of x^p.
class FinMatrix {
 public:
  FinMatrix() = default;
  FinMatrix(std::size_t rows, std::size_t cols);
  explicit FinMatrix(std::vector<std::vector<Rational>> rows);

  static FinMatrix identity(std::size_t n);
  static FinMatrix diagonal(const std::vector<Rational>& d);
  /// Column p is `columns[p]` padded or checked against `rows`.
  static FinMatrix from_columns(const std::vector<Poly>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  /// Image of a polynomial whose bound fits the column count.
  Poly apply(const Poly& p) const;
  Poly column(std::size_t c) const;

  FinMatrix transpose() const;
  FinMatrix inverse() const;
  FinMatrix pow(long k) const;
  FinMatrix block(std::size_t rows, std::size_t cols) const;
  std::vector<Rational> column_sums() const;

  FinMatrix operator-() const;
  FinMatrix& operator+=(const FinMatrix& rhs);
  FinMatrix& operator-=(const FinMatrix& rhs);
  FinMatrix& operator*=(const Rational& s);
  friend FinMatrix operator+(FinMatrix lhs, const FinMatrix& rhs) { return lhs += rhs; }
  friend FinMatrix operator-(FinMatrix lhs, const FinMatrix& rhs) { return lhs -= rhs; }
  friend FinMatrix operator*(FinMatrix lhs, const Rational& s) { return lhs *= s; }
  friend FinMatrix operator*(const Rational& s, FinMatrix rhs) { return rhs *= s; }
  friend FinMatrix operator*(const FinMatrix& lhs, const FinMatrix& rhs);

  friend bool operator==(const FinMatrix& lhs, const FinMatrix& rhs) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace riordan
