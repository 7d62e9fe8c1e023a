// Generalized Euler polynomials: numerators of ordinary Riordan diagonals.
#include <string>

#include "harness.hpp"
#include "riordan/array.hpp"
#include "riordan/bivariate.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/connection.hpp"
#include "riordan/genlagrange.hpp"
#include "riordan/numerator.hpp"
#include "toolkit.hpp"

namespace riordan::cli::verify {

namespace {

Rational sign(std::size_t n) { return n % 2 ? -1 : 1; }

Poly s_row(const Series& b, const Series& a, std::size_t n) {
  return sheffer_row(RiordanArray(b, log_series(a), Flavor::Exponential), n);
}

void thm2_1(Checker& c) {
  for (std::size_t n = 0; n <= c.max_n(); ++n) {
    c.at(n);
    const FinMatrix u = core_matrix(CoreKind::U, n);
    const FinMatrix uinv = core_matrix(CoreKind::Uinv, n);
    c.equal("U_n U_n^-1 = I", u * uinv, FinMatrix::identity(n + 1));
    c.equal("U_n E (1,-x) U_n^-1 = (-1)^n J_n", u * shift_matrix(n, 1) * reflect_matrix(n) * uinv,
            sign(n) * core_matrix(CoreKind::J, n));
  }
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(0, c.max_n_random());
    c.at(n);
    const Series b = c.gen().invertible_series(n + 1);
    const Series a = c.gen().unit_series(n + 1);
    c.equal("U_n s_n = g_n", core_matrix(CoreKind::U, n).apply(s_row(b, a, n)), ord_numerator(b, a, n));
  }
}

void thm2_2(Checker& c) {
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(0, c.max_n_random());
    c.at(n);
    const Series b = c.gen().invertible_series(n + 1);
    const Series a = c.gen().unit_series(n + 1);
    const Series ainv = one(n + 1) / a;
    c.equal("(-1)^n J_n g_n(b, a) = g_n(b/a, 1/a)", sign(n) * reversal(ord_numerator(b, a, n), n),
            ord_numerator(b * ainv, ainv, n));
    if (n > 0) {
      c.equal("alpha_n^(-1) = (-1)^n x J_n alpha_n", alpha_poly(ainv, n),
              sign(n) * reversal(alpha_poly(a, n), n).times_x());
    }
  }
}

void thm2_3(Checker& c) {
  for (std::size_t i = 0; i < c.instances(); ++i) {
    for (std::size_t n = 0; n <= c.max_n(); ++n) {
      c.at(n);
      const Series b = c.gen().invertible_series(n + 1);
      const Series a = c.gen().unit_series(n + 1);
      c.equal("g_n(1) = b_0 a_1^n", ord_numerator(b, a, n).eval(1), b[0] * pow(a[1], static_cast<long>(n)));
    }
  }
}

void thm2_4(Checker& c) {
  for (std::size_t n = 0; n <= c.max_n(); ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      c.at(n);
      const Poly p = c.gen().poly(n - m);
      const Rational ratio = factorial(static_cast<long>(n - m)) / factorial(static_cast<long>(n));
      c.equal("U_n c = (1-x)^m ((n-m)!/n!) U_{n-m} c", core_matrix(CoreKind::U, n).apply(p.with_bound(n)),
              one_minus_x(m) * core_matrix(CoreKind::U, n - m).apply(p) * ratio);
      c.equal("U_n^-1 (1-x)^m d = (n!/(n-m)!) U_{n-m}^-1 d", core_matrix(CoreKind::Uinv, n).apply(one_minus_x(m) * p),
              core_matrix(CoreKind::Uinv, n - m).apply(p) * ratio.inverse());
    }
  }
}

void thm2_5(Checker& c) {
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(0, c.max_n_random());
    c.at(n);
    const Series b = c.gen().invertible_series(n + 1);
    const Series a = c.gen().unit_series(n + 1);
    const Poly w = array_row(RiordanArray(b, a - one(n + 1)), n);
    c.equal("V_n^-1 [n,->](b, a - 1) = g_n", core_matrix(CoreKind::Vinv, n).apply(w), ord_numerator(b, a, n));
  }
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n(); ++n) {
      c.at(n, beta);
      const Series a = binomial_family(beta, n + 1);
      const Series lb = pow_series(a, beta);
      c.equal("a - 1 = x a^beta", a - one(n + 1), lb.times_x().truncated(n + 1));
      const Poly v = array_row(RiordanArray(one(n + 1), a - one(n + 1)), n);
      Poly closed(n);
      for (std::size_t m = 0; m <= n; ++m) {
        closed.at(m) = Rational(static_cast<long>(m), static_cast<long>(n)) *
                       binom(beta * Rational(static_cast<long>(n)), static_cast<long>(n - m));
      }
      c.equal("v_n = sum (m/n) C(n beta, n-m) x^m", v, closed);
      c.equal("alpha_n = V_n^-1 v_n", core_matrix(CoreKind::Vinv, n).apply(v), beta_alpha_closed(n, beta));
    }
  }
}

void eq1(Checker& c) {
  const std::size_t ox = 12;
  const std::size_t ot = 8;
  for (std::size_t i = 0; i < 10; ++i) {
    c.at(std::nullopt);
    const Series a = c.gen().unit_series(ox);
    c.guarded("sum alpha_n(t) x^n = (1-t)/(1 - t a(x(1-t)))",
              [&] { c.holds("sum alpha_n(t) x^n = (1-t)/(1 - t a(x(1-t)))", alpha_gf_check(a, ox, ot)); });
  }
  c.holds("a = 1 gives alpha_0 = 1 only", alpha_gf_check(one(ox), ox, ot));
  c.holds("a = 1/(1-x)", alpha_gf_check(Series::geometric(1, ox), ox, ot));
}

void eq2(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n(); ++n) {
      c.at(n, beta);
      const Series a = binomial_family(beta, 2 * n + 2);
      c.equal("closed form = numerator of (1, x a_beta)", beta_alpha_closed(n, beta), alpha_poly(a, n));
    }
  }
}

void stirling(Checker& c) {
  for (std::size_t n = 0; n <= c.max_n(); ++n) {
    c.at(n);
    const FinMatrix left = core_matrix(CoreKind::Uinv, n) * core_matrix(CoreKind::Vinv, n);
    const FinMatrix right = core_matrix(CoreKind::V, n) * core_matrix(CoreKind::U, n);
    const long nl = static_cast<long>(n);
    std::vector<Poly> falling_cols;
    std::vector<Poly> stirling_cols;
    for (long p = 0; p <= nl; ++p) {
      falling_cols.push_back(falling_poly(p) * (factorial(nl) / factorial(p)));
      Poly s(n);
      for (long m = 0; m <= p; ++m) s.at(m) = factorial(m) * stirling2(p, m) / factorial(nl);
      stirling_cols.push_back(s);
    }
    c.equal("U_n^-1 V_n^-1 x^p = (n!/p!) (x)_p", left, FinMatrix::from_columns(falling_cols, n + 1));
    c.equal("V_n U_n x^p = (1/n!) sum m! S(p, m) x^m", right, FinMatrix::from_columns(stirling_cols, n + 1));
  }
  for (std::size_t n = 1; n <= c.max_n(); ++n) {
    c.at(n);
    const FinMatrix left = tilde_matrix(TildeKind::Utinv, n) * tilde_matrix(TildeKind::Vt, n).inverse();
    const FinMatrix right = tilde_matrix(TildeKind::Vt, n) * tilde_matrix(TildeKind::Ut, n);
    const long nl = static_cast<long>(n);
    std::vector<Poly> first;
    std::vector<Poly> second;
    for (long p = 0; p < nl; ++p) {
      Poly s1(n - 1);
      Poly s2(n - 1);
      for (long m = 0; m <= p; ++m) {
        s1.at(m) = factorial(nl) / factorial(p + 1) * stirling1(p + 1, m + 1);
        s2.at(m) = factorial(m + 1) * stirling2(p + 1, m + 1) / factorial(nl);
      }
      first.push_back(s1);
      second.push_back(s2);
    }
    c.equal("Ut_n^-1 Vt_n^-1 x^p = (n!/(p+1)!) sum s(p+1, m+1) x^m", left, FinMatrix::from_columns(first, n));
    c.equal("Vt_n Ut_n x^p = (1/n!) sum (m+1)! S(p+1, m+1) x^m", right, FinMatrix::from_columns(second, n));
  }
}

}  // namespace

std::vector<Suite> euler_suites() {
  return {{"thm2.1", thm2_1}, {"thm2.2", thm2_2}, {"thm2.3", thm2_3}, {"thm2.4", thm2_4}, {"thm2.5", thm2_5},
          {"eq1", eq1},       {"eq2", eq2},       {"stirling", stirling}};
}

}  // namespace riordan::cli::verify
