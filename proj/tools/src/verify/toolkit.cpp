#include "toolkit.hpp"

#include <vector>

#include "riordan/array.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/error.hpp"
#include "riordan/genlagrange.hpp"
#include "riordan/numerator.hpp"

namespace riordan::cli::verify {

FinMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows, const Rational& scale) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (const auto& v : row) out.back().push_back(scale * v);
  }
  return FinMatrix(out);
}

FinMatrix diag(std::initializer_list<Rational> d, const Rational& scale) {
  std::vector<Rational> v;
  for (const auto& e : d) v.push_back(scale * e);
  return FinMatrix::diagonal(v);
}

Series one(std::size_t order) { return Series::constant(1, order); }
Series xs(std::size_t order) { return Series::x(order); }
Series one_plus_x(std::size_t order) { return one(order) + xs(order); }

FinMatrix toeplitz(const Series& f, std::size_t rows, std::size_t cols) {
  FinMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c <= r && c < cols; ++c) m(r, c) = f[r - c];
  }
  return m;
}

FinMatrix binomial_band_transpose(std::size_t n, long e) {
  return toeplitz(pow_series(one_plus_x(n), e), n + 1, n + 1).transpose();
}

FinMatrix inclusion(std::size_t rows, std::size_t cols) {
  FinMatrix m(rows, cols);
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) m(k, k) = 1;
  return m;
}

Poly drop_x(const Poly& c) {
  if (!c[0].is_zero()) throw DomainError("polynomial has a nonzero constant term");
  if (c.bound() == 0) return Poly();
  return Poly(std::vector<Rational>(c.coeffs().begin() + 1, c.coeffs().end()));
}

Poly reversal(const Poly& c, std::size_t bound) { return c.with_bound(bound).reversed(); }

Series log_derivative_factor(const Series& p) {
  const Series d = log_series(p).derivative();
  return one(d.order() + 1) + d.times_x();
}

Poly u_row(const Series& a, std::size_t n) {
  RiordanArray r(one(a.order()), log_series(a), Flavor::Exponential);
  return sheffer_row(r, n);
}

Series binomial_family(const Rational& beta, std::size_t order) {
  try {
    return gen_binomial_series(beta, 1, order);
  } catch (const PoleError&) {
    return gen_lagrange_series(one_plus_x(order), beta, order);
  }
}

Poly exp_numerator(const Series& b, const Series& a, std::size_t n) { return narayana_numerator(b, a, n).poly; }
Poly ord_numerator(const Series& b, const Series& a, std::size_t n) { return euler_numerator(b, a, n).poly; }

Poly array_row(const RiordanArray& r, std::size_t n) {
  return Poly(r.materialize(SliceKind::Row, n).entries);
}

Poly binom_sum(const Rational& u, const Rational& v, std::size_t top, std::size_t last) {
  Poly out(last);
  for (std::size_t m = 0; m <= last; ++m) {
    out.at(m) = binom(u, static_cast<long>(m)) * binom(v, static_cast<long>(top) - static_cast<long>(m));
  }
  return out;
}

Poly one_minus_x(std::size_t m) { return Poly{1, -1}.pow(m); }

Series power_log_factor(const Series& L, const Rational& e) { return log_derivative_factor(pow_series(L, e)); }

bool is_natural(const Rational& nb) { return nb.is_integer() && nb.sign() >= 0; }

}  // namespace riordan::cli::verify
