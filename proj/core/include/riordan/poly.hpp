#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Dense polynomial with an explicit degree bound. The coefficient vector
/// always has bound()+1 entries; entries above the true degree are zero.
/// Reversal is taken relative to the bound, not the true degree.
class Poly {
 public:
  Poly() : coeffs_(1) {}
  explicit Poly(std::size_t bound) : coeffs_(bound + 1) {}
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly monomial(std::size_t k, const Rational& c = 1);
  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
  /// The polynomial x + c.
  static Poly linear(const Rational& c);

  std::size_t bound() const { return coeffs_.size() - 1; }
  /// True degree; -1 for the zero polynomial.
  long degree() const;
  bool is_zero() const { return degree() < 0; }

  /// Coefficient of x^k; zero beyond the bound.
  Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
  Rational& at(std::size_t k);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same polynomial with a new bound. Throws RangeError if that would drop
  /// a nonzero coefficient.
  Poly with_bound(std::size_t bound) const;
  /// Bound lowered to the true degree (0 for the zero polynomial).
  Poly trimmed() const;

  Rational eval(const Rational& x) const;
  /// c(x) -> c(x + phi).
  Poly shifted(const Rational& phi) const;
  /// c(x) -> x^bound c(1/x).
  Poly reversed() const;
  /// c(x) -> c(-x).
  Poly reflected() const;
  /// c(x) -> c(s x).
  Poly scaled_arg(const Rational& s) const;
  /// Composition c(q(x)); the bound becomes bound*q.bound.
  Poly compose(const Poly& q) const;
  /// x^k c(x) with bound raised by k.
  Poly times_x(std::size_t k = 1) const;
  Poly derivative() const;

  /// Exact division; throws ConsistencyError on a nonzero remainder.
  Poly divide_exact(const Poly& divisor) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Rational& s) { return lhs *= s; }
  friend Poly operator*(const Rational& s, Poly rhs) { return rhs *= s; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  Poly pow(std::size_t k) const;

  /// Value equality; the bound is ignored.
  friend bool operator==(const Poly& lhs, const Poly& rhs);

  std::string str(char var = 'x') const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace riordan
