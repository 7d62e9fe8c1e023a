#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace riordan {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<long>(value)) {}

  Rational(long numerator, long denominator);
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(const Integer& value) : value_(value) {}
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or q == 0.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Integer value; throws DomainError if not an integer or out of `long` range.
  long to_long() const;

  Rational inverse() const;
  Rational abs() const;

  /// "p" when the denominator is one, "p/q" otherwise.
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

/// r^k for any integer k; k < 0 requires r != 0.
Rational pow(const Rational& r, long k);

}  // namespace riordan
