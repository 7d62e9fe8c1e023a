#include "riordan/genlagrange.hpp"

#include <string>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/connection.hpp"
#include "riordan/error.hpp"

namespace riordan {

namespace {

const Poly one_minus_x{1, -1};

FinMatrix build(std::size_t size, const auto& column) {
  std::vector<Poly> cols;
  for (std::size_t p = 0; p < size; ++p) cols.push_back(column(p));
  return FinMatrix::from_columns(cols, size);
}

Rational as_rational(std::size_t v) { return Rational(static_cast<long>(v)); }

std::string kind_name(BetaKind kind) {
  switch (kind) {
    case BetaKind::G: return "G";
    case BetaKind::H: return "H";
    case BetaKind::A: return "A";
    case BetaKind::T: return "T";
    case BetaKind::X: return "X";
  }
  return "?";
}

}  // namespace

Series gen_binomial_series(const Rational& beta, const Rational& phi, std::size_t N) {
  Series s(N);
  s.at(0) = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    const Rational top = phi + beta * as_rational(n);
    if (top.is_zero()) {
      throw PoleError("generalized binomial series has a pole at n = " + std::to_string(n) + " (phi = " + phi.str() +
                      ", beta = " + beta.str() + ")");
    }
    s.at(n) = phi / top * binom(top, static_cast<long>(n));
  }
  return s;
}

Series gen_lagrange_series(const Series& a, const Rational& beta, std::size_t N) {
  if (N > a.order()) throw RangeError("generalized Lagrange series beyond the order of a");
  return generalized_lagrange(a.truncated(N), beta);
}

TPoly t_poly(std::size_t n, const Rational& phi, const Rational& beta_arg) {
  Poly p(n);
  const long ln = static_cast<long>(n);
  for (long m = 0; m <= ln; ++m) p.at(static_cast<std::size_t>(m)) = binom(phi, m) * binom(beta_arg, ln - m);
  return {p, phi, beta_arg, n};
}

Poly beta_alpha_closed(std::size_t n, const Rational& beta) {
  if (n < 1) throw DomainError("closed form requires n >= 1");
  const Rational rn = as_rational(n);
  const long ln = static_cast<long>(n);
  Poly p(n);
  for (long m = 1; m <= ln; ++m) {
    p.at(static_cast<std::size_t>(m)) = binom(rn * (1 - beta), m - 1) * binom(rn * beta, ln - m) / rn;
  }
  return p;
}

Poly beta_phi_closed(std::size_t n, const Rational& beta) {
  if (n < 1) throw DomainError("closed form requires n >= 1");
  const Rational rn = as_rational(n);
  const long ln = static_cast<long>(n);
  const Rational scale = factorial(ln + 1) / rn;
  Poly p(n);
  for (long m = 1; m <= ln; ++m) {
    p.at(static_cast<std::size_t>(m)) = scale * binom(rn * (2 - beta), m - 1) * binom(rn * beta, ln - m);
  }
  return p;
}

FinMatrix beta_conjugated(BetaKind kind, std::size_t n, const Rational& beta) {
  if (n < 1) throw DomainError("beta matrices require n >= 1");
  const Rational shift = as_rational(n) * beta;
  switch (kind) {
    case BetaKind::G:
      return core_matrix(CoreKind::U, n) * shift_matrix(n, shift) * core_matrix(CoreKind::Uinv, n);
    case BetaKind::H:
      return exp_matrix(ExpKind::F, n) * shift_matrix(n, shift) * exp_matrix(ExpKind::Finv, n);
    case BetaKind::A:
      return tilde_matrix(TildeKind::Ut, n) * shift_matrix(n - 1, shift) * tilde_matrix(TildeKind::Utinv, n);
    case BetaKind::T:
      return tilde_matrix(TildeKind::Ft, n) * shift_matrix(n - 1, shift) * tilde_matrix(TildeKind::Ftinv, n);
    case BetaKind::X: {
      FinMatrix down(n + 1, n + 1);
      for (std::size_t r = 0; r < n; ++r) down(r, r + 1) = 1;
      return core_matrix(CoreKind::Vinv, n) * down * core_matrix(CoreKind::V, n);
    }
  }
  throw DomainError("unknown matrix kind");
}

FinMatrix beta_closed(BetaKind kind, std::size_t n, const Rational& beta) {
  if (n < 1) throw DomainError("beta matrices require n >= 1");
  const long ln = static_cast<long>(n);
  const Rational nb = as_rational(n) * beta;
  switch (kind) {
    case BetaKind::G:
      // sum_m C(-n beta + p, m) C(n beta + n - p, n - m) x^m
      return build(n + 1, [&](std::size_t p) {
        const long lp = static_cast<long>(p);
        Poly col(n);
        for (long m = 0; m <= ln; ++m) col.at(static_cast<std::size_t>(m)) = binom(-nb + lp, m) * binom(nb + ln - lp, ln - m);
        return col;
      });
    case BetaKind::H:
      // sum_{m>=p} C(n+m, m)^{-1} C(n-p, n-m) (1-x)^{n-m} t_m(-n beta + n + m | n beta, x)
      return build(n + 1, [&](std::size_t p) {
        const long lp = static_cast<long>(p);
        Poly col(n);
        for (long m = lp; m <= ln; ++m) {
          const Rational w = binom(ln - lp, ln - m) / binom(ln + m, m);
          const Poly t = t_poly(static_cast<std::size_t>(m), -nb + ln + m, nb).poly;
          col += one_minus_x.pow(static_cast<std::size_t>(ln - m)) * t * w;
        }
        return col.with_bound(n);
      });
    case BetaKind::A:
      // sum_{m>=p} (1/(m+1)) C(n-1-p, n-1-m) (1-x)^{n-1-m} t_m(-n beta + m + 1 | n beta, x)
      return build(n, [&](std::size_t p) {
        const long lp = static_cast<long>(p);
        Poly col(n - 1);
        for (long m = lp; m <= ln - 1; ++m) {
          const Rational w = binom(ln - 1 - lp, ln - 1 - m) / Rational(m + 1);
          const Poly t = t_poly(static_cast<std::size_t>(m), -nb + m + 1, nb).poly;
          col += one_minus_x.pow(static_cast<std::size_t>(ln - 1 - m)) * t * w;
        }
        return col.with_bound(n - 1);
      });
    case BetaKind::T:
      // sum_{m>=p} C(n+1+m, m)^{-1} C(n-1-p, n-1-m) (1-x)^{n-1-m} t_m(-n beta + n + m + 1 | n beta, x)
      return build(n, [&](std::size_t p) {
        const long lp = static_cast<long>(p);
        Poly col(n - 1);
        for (long m = lp; m <= ln - 1; ++m) {
          const Rational w = binom(ln - 1 - lp, ln - 1 - m) / binom(ln + 1 + m, m);
          const Poly t = t_poly(static_cast<std::size_t>(m), -nb + ln + m + 1, nb).poly;
          col += one_minus_x.pow(static_cast<std::size_t>(ln - 1 - m)) * t * w;
        }
        return col.with_bound(n - 1);
      });
    case BetaKind::X:
      // x^0 -> (1 - x - (1-x)^{n+1})/x, x^p -> x^{p-1}(1-x)
      return build(n + 1, [&](std::size_t p) {
        if (p > 0) return one_minus_x.times_x(p - 1).with_bound(n);
        Poly top = Poly{1, -1} - one_minus_x.pow(n + 1);
        return top.divide_exact(Poly{0, 1}).with_bound(n);
      });
  }
  throw DomainError("unknown matrix kind");
}

FinMatrix beta_matrix(BetaKind kind, std::size_t n, const Rational& beta) {
  FinMatrix conj = beta_conjugated(kind, n, beta);
  if (!(conj == beta_closed(kind, n, beta))) {
    throw ConsistencyError(kind_name(kind) + "_" + std::to_string(n) + "^" + beta.str() +
                           ": conjugation and closed form disagree");
  }
  return conj;
}

Poly beta_u_transform(const Poly& u, std::size_t n, const Rational& beta) {
  const Rational nb = as_rational(n) * beta;
  if (nb.is_zero()) return u;
  const Poly shifted = u.shifted(nb).times_x();
  return shifted.divide_exact(Poly::linear(nb)).with_bound(u.bound());
}

Series beta_q_transform(const Series& q, std::size_t n, const Rational& beta) {
  const Rational nb = as_rational(n) * beta;
  const Series g = Series::geometric(-nb, q.order());
  return g * compose(q, g.times_x().truncated(q.order()));
}

}  // namespace riordan
