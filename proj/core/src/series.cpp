#include "riordan/series.hpp"

#include <algorithm>
#include <sstream>

#include "riordan/error.hpp"

namespace riordan {

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

Series Series::constant(const Rational& c, std::size_t order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::x(std::size_t order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

Series Series::from_poly(const Poly& p, std::size_t order) {
  Series s(order);
  for (std::size_t k = 0; k <= order; ++k) s.coeffs_[k] = p[k];
  return s;
}

Series Series::geometric(const Rational& c, std::size_t order) {
  Series s(order);
  Rational power = 1;
  for (auto& v : s.coeffs_) {
    v = power;
    power *= c;
  }
  return s;
}

const Rational& Series::operator[](std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw RangeError("coefficient " + std::to_string(k) + " beyond truncation order " + std::to_string(order()));
  }
  return coeffs_[k];
}

Rational& Series::at(std::size_t k) {
  if (k >= coeffs_.size()) {
    throw RangeError("coefficient " + std::to_string(k) + " beyond truncation order " + std::to_string(order()));
  }
  return coeffs_[k];
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) throw RangeError("cannot extend a series beyond its truncation order");
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

Series Series::times_x(std::size_t k) const {
  std::vector<Rational> c(k);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Series(std::move(c));
}

Series Series::over_x() const {
  if (!coeffs_[0].is_zero()) throw DomainError("division by x of a series with nonzero constant term");
  if (order() == 0) throw RangeError("division by x of an order-0 series");
  return Series(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

Series Series::scaled_arg(const Rational& c) const {
  Series out(*this);
  Rational power = 1;
  for (auto& v : out.coeffs_) {
    v *= power;
    power *= c;
  }
  return out;
}

Series Series::derivative() const {
  if (order() == 0) throw RangeError("derivative of an order-0 series");
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Series(std::move(c));
}

Poly Series::to_poly(std::size_t k) const {
  if (k > order()) throw RangeError("polynomial part beyond truncation order");
  return Poly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(k) + 1));
}

Series Series::operator-() const {
  Series out(*this);
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

Series& Series::operator+=(const Series& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Series& Series::operator*=(const Rational& s) {
  for (auto& v : coeffs_) v *= s;
  return *this;
}

Series operator*(const Series& lhs, const Series& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

Series operator/(const Series& lhs, const Series& rhs) {
  if (rhs.coeffs_[0].is_zero()) throw DomainError("division by a series with zero constant term");
  const std::size_t n = std::min(lhs.order(), rhs.order());
  const Rational inv0 = rhs.coeffs_[0].inverse();
  Series out(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational c = lhs.coeffs_[k];
    for (std::size_t j = 1; j <= k; ++j) c -= rhs.coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = c * inv0;
  }
  return out;
}

bool operator==(const Series& lhs, const Series& rhs) {
  const std::size_t n = std::min(lhs.coeffs_.size(), rhs.coeffs_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs.coeffs_[k] != rhs.coeffs_[k]) return false;
  }
  return true;
}

std::string Series::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? ", " : "") << coeffs_[k];
  return os.str();
}

Series compose(const Series& f, const Series& g) {
  if (!g[0].is_zero()) throw DomainError("composition requires g(0) = 0");
  const std::size_t n = std::min(f.order(), g.order());
  const Series gt = g.truncated(n);
  Series acc = Series::constant(f[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * gt;
    acc.at(0) += f[k];
  }
  return acc;
}

namespace {

void require_reversible(const Series& g) {
  if (!g[0].is_zero()) throw DomainError("reversion requires g(0) = 0");
  if (g.order() < 1 || g[1].is_zero()) throw DomainError("reversion requires g'(0) != 0");
}

}  // namespace

Series reversion(const Series& g) {
  require_reversible(g);
  const std::size_t n = g.order();
  const Rational inv1 = g[1].inverse();
  Series h(n);
  h.at(1) = inv1;
  // With h_k fixed for k < m, [x^m] g(h) depends on h_m only through g_1 h_m.
  for (std::size_t m = 2; m <= n; ++m) {
    const Series c = compose(g.truncated(m), h.truncated(m));
    h.at(m) = -c[m] * inv1;
  }
  return h;
}

Series reversion_lagrange(const Series& g) {
  require_reversible(g);
  const std::size_t n = g.order();
  const Series quotient = g.over_x();
  Series h(n);
  for (std::size_t m = 1; m <= n; ++m) {
    const Series p = pow_series(quotient.truncated(m - 1), -static_cast<long>(m));
    h.at(m) = p[m - 1] / Rational(static_cast<long>(m));
  }
  return h;
}

Series log_series(const Series& a) {
  if (!a[0].is_one()) throw DomainError("log requires constant term 1");
  const std::size_t n = a.order();
  if (n == 0) return Series(0);
  const Series q = a.derivative() / a.truncated(n - 1);
  Series out(n);
  for (std::size_t k = 1; k <= n; ++k) out.at(k) = q[k - 1] / Rational(static_cast<long>(k));
  return out;
}

Series exp_series(const Series& a) {
  if (!a[0].is_zero()) throw DomainError("exp requires constant term 0");
  const std::size_t n = a.order();
  Series out(n);
  out.at(0) = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational c;
    for (std::size_t k = 1; k <= m; ++k) c += Rational(static_cast<long>(k)) * a[k] * out[m - k];
    out.at(m) = c / Rational(static_cast<long>(m));
  }
  return out;
}

Series pow_series(const Series& a, long k) {
  if (k < 0) return Series::constant(1, a.order()) / pow_series(a, -k);
  Series result = Series::constant(1, a.order());
  Series base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Series pow_series(const Series& a, const Rational& phi) {
  if (phi.is_integer()) return pow_series(a, phi.to_long());
  if (!a[0].is_one()) throw DomainError("non-integer power requires constant term 1");
  // n b_n = sum_{k=1}^n ((phi + 1) k - n) a_k b_{n-k}
  const std::size_t n = a.order();
  Series out(n);
  out.at(0) = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational c;
    for (std::size_t k = 1; k <= m; ++k) {
      c += ((phi + 1) * Rational(static_cast<long>(k)) - Rational(static_cast<long>(m))) * a[k] * out[m - k];
    }
    out.at(m) = c / Rational(static_cast<long>(m));
  }
  return out;
}

}  // namespace riordan
