#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "riordan/poly.hpp"
#include "riordan/rational.hpp"

namespace riordan {

/// Truncated formal power series: coefficients 0..order are known, nothing
/// beyond. Binary operations return the smaller of the two orders.
class Series {
 public:
  Series() : coeffs_(1) {}
  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  explicit Series(std::vector<Rational> coeffs);

  static Series constant(const Rational& c, std::size_t order);
  static Series x(std::size_t order);
  /// A polynomial viewed as a series; coefficients above `order` are dropped.
  static Series from_poly(const Poly& p, std::size_t order);
  /// 1/(1 - c x).
  static Series geometric(const Rational& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  /// Throws RangeError for k > order.
  const Rational& operator[](std::size_t k) const;
  Rational& at(std::size_t k);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Series truncated(std::size_t order) const;
  /// x * a, order + 1.
  Series times_x(std::size_t k = 1) const;
  /// a / x; requires a_0 = 0, order - 1.
  Series over_x() const;
  /// a(c x).
  Series scaled_arg(const Rational& c) const;
  Series derivative() const;
  /// Coefficients 0..k as a polynomial of bound k.
  Poly to_poly(std::size_t k) const;

  Series operator-() const;
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Rational& s);
  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Series lhs, const Rational& s) { return lhs *= s; }
  friend Series operator*(const Rational& s, Series rhs) { return rhs *= s; }
  friend Series operator*(const Series& lhs, const Series& rhs);
  /// Requires rhs_0 != 0.
  friend Series operator/(const Series& lhs, const Series& rhs);

  /// Equality up to the smaller order.
  friend bool operator==(const Series& lhs, const Series& rhs);

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

/// f(g(x)); requires g_0 = 0.
Series compose(const Series& f, const Series& g);
/// Compositional inverse by coefficient-wise solve of g(h(x)) = x.
Series reversion(const Series& g);
/// Compositional inverse from h_n = (1/n)[x^{n-1}] (g/x)^{-n}.
Series reversion_lagrange(const Series& g);
/// Requires a_0 = 1.
Series log_series(const Series& a);
/// Requires a_0 = 0.
Series exp_series(const Series& a);
/// Integer power; negative powers go through the reciprocal.
Series pow_series(const Series& a, long k);
/// Rational power; integers dispatch to the integer overload, otherwise a_0 = 1.
Series pow_series(const Series& a, const Rational& phi);

}  // namespace riordan
