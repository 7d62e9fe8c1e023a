#include "riordan/connection.hpp"

#include <string>
#include <vector>

#include "riordan/combinatorics.hpp"
#include "riordan/error.hpp"

namespace riordan {

namespace {

const Poly one_minus_x{1, -1};
const Poly one_plus_x{1, 1};

Rational fact(std::size_t n) { return factorial(static_cast<long>(n)); }

FinMatrix build(std::size_t size, const auto& column) {
  std::vector<Poly> cols;
  for (std::size_t p = 0; p < size; ++p) cols.push_back(column(p));
  return FinMatrix::from_columns(cols, size);
}

void require_agree(const FinMatrix& lhs, const FinMatrix& rhs, const std::string& what) {
  if (!(lhs == rhs)) throw ConsistencyError(what + ": the two constructions disagree");
}

// (1-x)^{power} sum_{m>=0} weight(m) x^m, where the sum is rational with that
// denominator; the numerator is read from enough leading terms.
Poly rational_numerator(std::size_t power, std::size_t bound, const auto& weight) {
  const std::size_t terms = bound + 1;
  std::vector<Rational> c(terms);
  for (std::size_t m = 0; m < terms; ++m) c[m] = weight(m);
  const Series s = Series(c) * Series::from_poly(one_minus_x.pow(power), bound);
  return s.to_poly(bound);
}

FinMatrix f_matrix(std::size_t n) {
  const long ln = static_cast<long>(n);
  return build(n + 1, [&](std::size_t p) {
    return rational_numerator(2 * n + 1, n, [&](std::size_t m) {
      return pow(Rational(static_cast<long>(m)), static_cast<long>(p)) * binom(static_cast<long>(m) + ln, ln);
    });
  });
}

FinMatrix f_from_u(std::size_t n) {
  // F_n x^p = ((2n)!/n!) U_{2n} (x^p [x+1]_n), top n+1 rows.
  const FinMatrix u = core_matrix(CoreKind::U, 2 * n);
  const Rational scale = fact(2 * n) / fact(n);
  return build(n + 1, [&](std::size_t p) {
    Poly image = u.apply(rising_poly(static_cast<long>(n), 1).times_x(p)) * scale;
    return image.with_bound(n);
  });
}

}  // namespace

FinMatrix core_matrix(CoreKind kind, std::size_t n) {
  const long ln = static_cast<long>(n);
  switch (kind) {
    case CoreKind::U:
      return build(n + 1, [&](std::size_t p) {
        return one_minus_x.pow(n - p) * eulerian(static_cast<long>(p)) * fact(n).inverse();
      });
    case CoreKind::Uinv:
      return build(n + 1, [&](std::size_t p) {
        return falling_poly(static_cast<long>(p)) * rising_poly(ln - static_cast<long>(p), 1);
      });
    case CoreKind::V:
      return build(n + 1, [&](std::size_t p) { return one_plus_x.pow(n - p).times_x(p); });
    case CoreKind::Vinv:
      return build(n + 1, [&](std::size_t p) { return one_minus_x.pow(n - p).times_x(p); });
    case CoreKind::J:
      return build(n + 1, [&](std::size_t p) { return Poly::monomial(n - p); });
    case CoreKind::I:
      return FinMatrix::identity(n + 1);
  }
  throw DomainError("unknown matrix kind");
}

FinMatrix shift_matrix(std::size_t n, const Rational& phi) {
  return build(n + 1, [&](std::size_t p) { return Poly::monomial(p).shifted(phi); });
}

FinMatrix reflect_matrix(std::size_t n) {
  return build(n + 1, [&](std::size_t p) { return Poly::monomial(p, p % 2 == 0 ? 1 : -1); });
}

FinMatrix riordan_matrix(const RiordanArray& r, std::size_t size) { return FinMatrix(r.window(size)); }

FinMatrix s_closed(std::size_t n) {
  const long ln = static_cast<long>(n);
  return build(n + 1, [&](std::size_t p) {
    const long lp = static_cast<long>(p);
    const Rational scale = fact(n + p) * fact(n - p) / fact(n);
    Poly col(n);
    for (long m = lp; m <= ln; ++m) col.at(static_cast<std::size_t>(m)) = scale * binom(ln, m - lp) * binom(ln, ln - m);
    return col;
  });
}

FinMatrix sinv_closed(std::size_t n) {
  const long ln = static_cast<long>(n);
  return build(n + 1, [&](std::size_t p) {
    const long lp = static_cast<long>(p);
    const Rational scale = fact(p) * fact(n - p) / fact(2 * n);
    Poly col(n);
    for (long m = lp; m <= ln; ++m) {
      col.at(static_cast<std::size_t>(m)) = scale * binom(-ln, m - lp) * binom(2 * ln, ln - m);
    }
    return col;
  });
}

FinMatrix exp_matrix(ExpKind kind, std::size_t n) {
  const long ln = static_cast<long>(n);
  switch (kind) {
    case ExpKind::F: {
      FinMatrix f = f_matrix(n);
      require_agree(f, f_from_u(n), "F_" + std::to_string(n));
      return f;
    }
    case ExpKind::Finv:
      return build(n + 1, [&](std::size_t p) {
        return falling_poly(static_cast<long>(p)) * rising_poly(ln - static_cast<long>(p), ln + 1) *
               (fact(n) / fact(2 * n));
      });
    case ExpKind::S: {
      FinMatrix s = exp_matrix(ExpKind::F, n) * core_matrix(CoreKind::Uinv, n);
      require_agree(s, s_closed(n), "S_" + std::to_string(n));
      return s;
    }
    case ExpKind::Sinv: {
      FinMatrix s = core_matrix(CoreKind::U, n) * exp_matrix(ExpKind::Finv, n);
      require_agree(s, sinv_closed(n), "S_" + std::to_string(n) + "^-1");
      return s;
    }
    case ExpKind::C: {
      std::vector<Rational> d;
      for (std::size_t p = 0; p <= n; ++p) d.push_back(fact(n + p) / fact(p));
      return FinMatrix::diagonal(d);
    }
  }
  throw DomainError("unknown matrix kind");
}

FinMatrix tilde_matrix(TildeKind kind, std::size_t n) {
  if (n < 1) throw DomainError("tilde matrices require n >= 1");
  const long ln = static_cast<long>(n);
  switch (kind) {
    case TildeKind::Ut:
      return build(n, [&](std::size_t p) {
        const Poly reduced = eulerian(static_cast<long>(p) + 1).divide_exact(Poly{0, 1});
        return one_minus_x.pow(n - 1 - p) * reduced * fact(n).inverse();
      });
    case TildeKind::Utinv:
      return build(n, [&](std::size_t p) {
        return falling_poly(static_cast<long>(p), -1) * rising_poly(ln - static_cast<long>(p) - 1, 1);
      });
    case TildeKind::Vt:
      return core_matrix(CoreKind::V, n - 1);
    case TildeKind::Jt:
      return core_matrix(CoreKind::J, n - 1);
    case TildeKind::It:
      return FinMatrix::identity(n);
    case TildeKind::Ft: {
      // (1-x)^{2n+1} sum_m (m+1)^{p+1} C(m+n+1, n) x^m
      FinMatrix ft = build(n, [&](std::size_t p) {
        return rational_numerator(2 * n + 1, n - 1, [&](std::size_t m) {
          const long lm = static_cast<long>(m);
          return pow(Rational(lm + 1), static_cast<long>(p) + 1) * binom(lm + ln + 1, ln);
        });
      });
      const FinMatrix f = exp_matrix(ExpKind::F, n);
      FinMatrix inner(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) inner(r, c) = f(r + 1, c + 1);
      }
      require_agree(ft, inner, "tilde F_" + std::to_string(n));
      return ft;
    }
    case TildeKind::Ftinv: {
      FinMatrix inv = build(n, [&](std::size_t p) {
        return falling_poly(static_cast<long>(p), -1) * rising_poly(ln - static_cast<long>(p) - 1, ln + 1) *
               (fact(n) / fact(2 * n));
      });
      require_agree(inv * tilde_matrix(TildeKind::Ft, n), FinMatrix::identity(n),
                    "tilde F_" + std::to_string(n) + "^-1");
      return inv;
    }
    case TildeKind::St: {
      const FinMatrix v = tilde_matrix(TildeKind::Vt, n);
      FinMatrix st = v.inverse() * tilde_matrix(TildeKind::Ct, n) * v;
      require_agree(st, tilde_matrix(TildeKind::Ft, n) * tilde_matrix(TildeKind::Utinv, n),
                    "tilde S_" + std::to_string(n));
      return st;
    }
    case TildeKind::Ct: {
      std::vector<Rational> d;
      for (std::size_t p = 0; p < n; ++p) d.push_back(fact(n + p + 1) / fact(p + 1));
      return FinMatrix::diagonal(d);
    }
    case TildeKind::Dt: {
      std::vector<Rational> d;
      for (std::size_t p = 0; p < n; ++p) d.push_back(Rational(static_cast<long>(p) + 1));
      return FinMatrix::diagonal(d);
    }
  }
  throw DomainError("unknown matrix kind");
}

FinMatrix amazing_conjugated(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw DomainError("W_(n,m) requires n, m >= 1");
  std::vector<Rational> d;
  for (std::size_t p = 0; p < n; ++p) d.push_back(pow(Rational(static_cast<long>(m)), static_cast<long>(p) + 1));
  return tilde_matrix(TildeKind::Ut, n) * FinMatrix::diagonal(d) * tilde_matrix(TildeKind::Utinv, n);
}

FinMatrix amazing_matrix(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw DomainError("W_(n,m) requires n, m >= 1");
  const std::size_t order = m * n;
  Series block(order);
  for (std::size_t k = 0; k < m && k <= order; ++k) block.at(k) = 1;
  const Series a = pow_series(block, static_cast<long>(n) + 1);
  FinMatrix w = strided_matrix(a, m, n, n);
  require_agree(w, amazing_conjugated(n, m), "W_(" + std::to_string(n) + "," + std::to_string(m) + ")");
  return w;
}

FinMatrix strided_matrix(const Series& a, std::size_t m, std::size_t rows, std::size_t cols) {
  if (m < 1) throw DomainError("stride must be positive");
  if (rows > 0 && a.order() + 1 < m * rows) {
    throw RangeError("strided matrix needs series order " + std::to_string(m * rows - 1));
  }
  FinMatrix w(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const long top = static_cast<long>(m * r + m) - 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const long idx = top - static_cast<long>(c);
      if (idx >= 0) w(r, c) = a[static_cast<std::size_t>(idx)];
    }
  }
  return w;
}

}  // namespace riordan
