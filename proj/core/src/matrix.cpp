#include "riordan/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "riordan/error.hpp"

namespace riordan {

FinMatrix::FinMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

FinMatrix::FinMatrix(std::vector<std::vector<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.front().size() : 0;
  data_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix rows");
    for (auto& v : r) data_.push_back(std::move(v));
  }
}

FinMatrix FinMatrix::identity(std::size_t n) {
  FinMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FinMatrix FinMatrix::diagonal(const std::vector<Rational>& d) {
  FinMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

FinMatrix FinMatrix::from_columns(const std::vector<Poly>& columns, std::size_t rows) {
  FinMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].degree() >= static_cast<long>(rows)) throw RangeError("column polynomial exceeds matrix rows");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Poly FinMatrix::apply(const Poly& p) const {
  if (p.degree() >= static_cast<long>(cols_)) throw RangeError("polynomial degree exceeds matrix order");
  std::vector<Rational> out(std::max<std::size_t>(rows_, 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!p[c].is_zero()) out[r] += (*this)(r, c) * p[c];
    }
  }
  return Poly(std::move(out));
}

Poly FinMatrix::column(std::size_t c) const {
  std::vector<Rational> out(std::max<std::size_t>(rows_, 1));
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return Poly(std::move(out));
}

FinMatrix FinMatrix::transpose() const {
  FinMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  }
  return m;
}

FinMatrix FinMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  FinMatrix a(*this);
  FinMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DomainError("singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = a(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

FinMatrix FinMatrix::pow(long k) const {
  if (rows_ != cols_) throw DomainError("power of a non-square matrix");
  if (k < 0) return inverse().pow(-k);
  FinMatrix result = identity(rows_);
  FinMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

FinMatrix FinMatrix::block(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw RangeError("block larger than matrix");
  FinMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = (*this)(r, c);
  }
  return m;
}

std::vector<Rational> FinMatrix::column_sums() const {
  std::vector<Rational> sums(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) sums[c] += (*this)(r, c);
  }
  return sums;
}

FinMatrix FinMatrix::operator-() const {
  FinMatrix m(*this);
  for (auto& v : m.data_) v = -v;
  return m;
}

FinMatrix& FinMatrix::operator+=(const FinMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("matrix dimension mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

FinMatrix& FinMatrix::operator-=(const FinMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("matrix dimension mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

FinMatrix& FinMatrix::operator*=(const Rational& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

FinMatrix operator*(const FinMatrix& lhs, const FinMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DomainError("matrix dimension mismatch in product");
  FinMatrix m(lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& a = lhs(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) m(r, c) += a * rhs(k, c);
    }
  }
  return m;
}

std::string FinMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

}  // namespace riordan
