#include "riordan/poly.hpp"

#include <algorithm>
#include <sstream>

#include "riordan/error.hpp"

namespace riordan {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

Poly Poly::monomial(std::size_t k, const Rational& c) {
  Poly p(k);
  p.coeffs_[k] = c;
  return p;
}

Poly Poly::linear(const Rational& c) { return Poly{c, 1}; }

long Poly::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (!coeffs_[k].is_zero()) return static_cast<long>(k);
  }
  return -1;
}

Rational& Poly::at(std::size_t k) {
  if (k >= coeffs_.size()) throw RangeError("coefficient index beyond polynomial bound");
  return coeffs_[k];
}

Poly Poly::with_bound(std::size_t bound) const {
  if (degree() > static_cast<long>(bound)) {
    throw RangeError("polynomial of degree " + std::to_string(degree()) + " does not fit bound " +
                     std::to_string(bound));
  }
  std::vector<Rational> c(coeffs_);
  c.resize(bound + 1);
  return Poly(std::move(c));
}

Poly Poly::trimmed() const { return with_bound(static_cast<std::size_t>(std::max(degree(), 0L))); }

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

Poly Poly::shifted(const Rational& phi) const {
  // Repeated synthetic division by (x - phi) gives the Taylor coefficients at phi.
  std::vector<Rational> c(coeffs_);
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k-- > i;) c[k] += phi * c[k + 1];
  }
  return Poly(std::move(c));
}

Poly Poly::reversed() const {
  std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
  return Poly(std::move(c));
}

Poly Poly::reflected() const { return scaled_arg(-1); }

Poly Poly::scaled_arg(const Rational& s) const {
  Poly out(*this);
  Rational power = 1;
  for (auto& c : out.coeffs_) {
    c *= power;
    power *= s;
  }
  return out;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc(bound() * q.bound());
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * q;
    acc += Poly::constant(coeffs_[k]);
  }
  return acc.with_bound(bound() * q.bound());
}

Poly Poly::times_x(std::size_t k) const {
  std::vector<Rational> c(k);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (coeffs_.size() == 1) return Poly();
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(c));
}

Poly Poly::divide_exact(const Poly& divisor) const {
  const long dd = divisor.degree();
  if (dd < 0) throw DomainError("polynomial division by zero");
  const long nd = degree();
  if (nd < dd) {
    if (nd < 0) return Poly();
    throw ConsistencyError("polynomial division leaves a remainder");
  }
  std::vector<Rational> rem(coeffs_.begin(), coeffs_.begin() + nd + 1);
  std::vector<Rational> quot(static_cast<std::size_t>(nd - dd + 1));
  const Rational lead = divisor.coeffs_[static_cast<std::size_t>(dd)];
  for (long k = nd - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) throw ConsistencyError("polynomial division leaves a remainder");
  }
  return Poly(std::move(quot));
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out(lhs.bound() + rhs.bound());
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

Poly Poly::pow(std::size_t k) const {
  Poly out = Poly::constant(1);
  for (std::size_t i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool operator==(const Poly& lhs, const Poly& rhs) {
  const std::size_t n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs[k] != rhs[k]) return false;
  }
  return true;
}

std::string Poly::str(char var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = c.abs();
    if (k == 0 || !mag.is_one()) {
      os << mag.str();
      if (k > 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace riordan
