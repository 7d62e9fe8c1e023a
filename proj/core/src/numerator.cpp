#include "riordan/numerator.hpp"

#include <string>
#include <vector>

#include "riordan/bivariate.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/connection.hpp"
#include "riordan/error.hpp"

namespace riordan {

namespace {

void require_square_pair(const Series& b, const Series& a, std::size_t n) {
  if (!a[0].is_one()) throw DomainError("numerator polynomials require a(0) = 1");
  if (b[0].is_zero()) throw DomainError("numerator polynomials require b(0) != 0");
  if (a.order() < n || b.order() < n) {
    throw RangeError("series order too small for numerator " + std::to_string(n));
  }
}

// [x^n] b a^k for k = 0..count-1.
std::vector<Rational> square_row(const Series& b, const Series& a, std::size_t n, std::size_t count) {
  std::vector<Rational> row;
  Series col = b.truncated(n);
  const Series at = a.truncated(n);
  for (std::size_t k = 0; k < count; ++k) {
    row.push_back(col[n]);
    col = col * at;
  }
  return row;
}

// Multiplies sum_k terms[k] x^k by (1-x)^power; coefficients 0..bound form the
// numerator, the rest must vanish.
NumeratorResult numerator_from_terms(const std::vector<Rational>& terms, std::size_t power, std::size_t bound) {
  const Series s = Series(terms) * Series::from_poly(Poly{1, -1}.pow(power), terms.size() - 1);
  for (std::size_t k = bound + 1; k <= s.order(); ++k) {
    if (!s[k].is_zero()) {
      throw ConsistencyError("numerator residual coefficient " + std::to_string(k) + " is " + s[k].str());
    }
  }
  return {s.to_poly(bound), s.order() - bound};
}

}  // namespace

NumeratorResult euler_numerator(const Series& b, const Series& a, std::size_t n) {
  require_square_pair(b, a, n);
  // w_m = [x^n] b (a-1)^m, then g_n = sum_m w_m x^m (1-x)^{n-m}.
  Poly g(n);
  Series col = b.truncated(n);
  Series am1 = a.truncated(n);
  am1.at(0) = 0;
  for (std::size_t m = 0; m <= n; ++m) {
    const Rational w = col[n];
    if (!w.is_zero()) g += Poly{1, -1}.pow(n - m).times_x(m) * w;
    col = col * am1;
  }
  g = g.with_bound(n);
  const NumeratorResult check = numerator_from_terms(square_row(b, a, n, 2 * n + 2), n + 1, n);
  if (!(check.poly == g)) throw ConsistencyError("Euler numerator routes disagree at n = " + std::to_string(n));
  return {g, check.residual_checked};
}

NumeratorResult narayana_numerator(const Series& b, const Series& a, std::size_t n) {
  require_square_pair(b, a, n);
  const long ln = static_cast<long>(n);
  // s_n(k) = n! [x^n] b a^k, a polynomial in k: row n of (b, log a)_E.
  const Series la = log_series(a.truncated(n));
  Poly s(n);
  Series col = b.truncated(n);
  for (std::size_t m = 0; m <= n; ++m) {
    s.at(m) = col[n] * factorial(ln) / factorial(static_cast<long>(m));
    col = col * la;
  }
  const Poly lifted = rising_poly(ln, 1) * s;
  const FinMatrix u = core_matrix(CoreKind::U, 2 * n);
  Poly h = u.apply(lifted) * (factorial(2 * ln) / factorial(ln));
  if (h.degree() > ln) throw ConsistencyError("Narayana numerator exceeds degree " + std::to_string(n));
  h = h.with_bound(n);

  const std::size_t count = 2 * n + 2;
  std::vector<Rational> diag = square_row(b, a, n, count);
  for (std::size_t k = 0; k < count; ++k) diag[k] *= rising(static_cast<long>(k) + 1, ln);
  const NumeratorResult check = numerator_from_terms(diag, 2 * n + 1, n);
  if (!(check.poly == h)) throw ConsistencyError("Narayana numerator routes disagree at n = " + std::to_string(n));
  return {h, check.residual_checked};
}

Poly alpha_poly(const Series& a, std::size_t n) {
  return euler_numerator(Series::constant(1, a.order()), a, n).poly;
}

Poly phi_poly(const Series& a, std::size_t n) {
  return narayana_numerator(Series::constant(1, a.order()), a, n).poly;
}

bool alpha_gf_check(const Series& a, std::size_t order_x, std::size_t order_t) {
  if (!a[0].is_one()) throw DomainError("generating function check requires a(0) = 1");
  const Series at = a.truncated(order_x);
  std::vector<Poly> rows;
  for (std::size_t n = 0; n <= order_x; ++n) rows.push_back(alpha_poly(at, n));
  const BiSeries lhs = BiSeries::from_rows(rows, order_x, order_t);

  const BiSeries one = BiSeries::from_t(Series::constant(1, order_t), order_x);
  const BiSeries t = BiSeries::from_t(Series::x(order_t), order_x);
  const BiSeries inner = compose_x(at, one - t);
  const BiSeries rhs = (one - t) / (one - t * inner);
  return lhs == rhs;
}

bool phi_gf_check(const Series& a, std::size_t order_x, std::size_t order_t) {
  if (!a[0].is_one()) throw DomainError("generating function check requires a(0) = 1");
  const Series at = a.truncated(order_x);
  std::vector<Poly> rows;
  for (std::size_t n = 0; n <= order_x; ++n) {
    rows.push_back(phi_poly(at, n) * factorial(static_cast<long>(n) + 1).inverse());
  }
  const BiSeries lhs = BiSeries::from_rows(rows, order_x, order_t);

  const BiSeries one = BiSeries::from_t(Series::constant(1, order_t), order_x);
  const BiSeries t = BiSeries::from_t(Series::x(order_t), order_x);
  // Each pass fixes one more power of x.
  BiSeries b = one;
  for (std::size_t i = 0; i <= order_x; ++i) b = one / (one - t * compose_x(at, b));
  // x -> x (1-t)^2 scales the x^i row by (1-t)^{2i}.
  std::vector<Poly> scaled;
  for (std::size_t i = 0; i <= order_x; ++i) {
    Poly row = b.row(i).to_poly(order_t) * Poly{1, -1}.pow(2 * i + 1);
    scaled.push_back(row);
  }
  const BiSeries rhs = BiSeries::from_rows(scaled, order_x, order_t);
  return lhs == rhs;
}

}  // namespace riordan
