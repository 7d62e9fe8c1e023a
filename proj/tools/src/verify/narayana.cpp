// Generalized Narayana polynomials: numerators of exponential Riordan diagonals.
#include <string>

#include "harness.hpp"
#include "riordan/array.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/connection.hpp"
#include "riordan/genlagrange.hpp"
#include "riordan/numerator.hpp"
#include "toolkit.hpp"

namespace riordan::cli::verify {

namespace {

Rational sign(std::size_t n) { return n % 2 ? -1 : 1; }

Rational central(std::size_t n) {
  const long nl = static_cast<long>(n);
  return factorial(2 * nl) / factorial(nl);
}

/// a-bar with (1, x a)^{-1} = (1, x a-bar).
Series reciprocal_inverse(const Series& a) { return reversion(a.times_x()).over_x(); }

void thm3_1(Checker& c) {
  for (std::size_t n = 0; n <= c.max_n(); ++n) {
    c.at(n);
    const FinMatrix f = exp_matrix(ExpKind::F, n);
    const FinMatrix finv = exp_matrix(ExpKind::Finv, n);
    c.equal("F_n F_n^-1 = I", f * finv, FinMatrix::identity(n + 1));
    c.equal("F_n E^{n+1} (1,-x) F_n^-1 = (-1)^n J_n",
            f * shift_matrix(n, static_cast<long>(n) + 1) * reflect_matrix(n) * finv,
            sign(n) * core_matrix(CoreKind::J, n));
  }
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(0, c.max_n_random());
    c.at(n);
    const Series b = c.gen().invertible_series(n + 1);
    const Series a = c.gen().unit_series(n + 1);
    const Poly s = sheffer_row(RiordanArray(b, log_series(a), Flavor::Exponential), n);
    c.equal("F_n s_n = h_n", exp_matrix(ExpKind::F, n).apply(s), exp_numerator(b, a, n));
  }
}

void thm3_2(Checker& c) {
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(0, 5);
    c.at(n);
    const std::size_t N = n + 2;
    const Series b = c.gen().invertible_series(N);
    const Series a = c.gen().unit_series(N);
    const Series xabar = reciprocal_inverse(a).times_x().truncated(N);
    const Series image_b = compose(b, xabar) * xabar.derivative();
    c.equal("(-1)^n J_n h_n = numerator of (b(x abar) (x abar)', x abar)_E", sign(n) * reversal(exp_numerator(b, a, n), n),
            exp_numerator(image_b, xabar.over_x(), n));
    c.equal("h_n(1) = b_0 a_1^n (2n)!/n!", exp_numerator(b, a, n).eval(1),
            b[0] * pow(a[1], static_cast<long>(n)) * central(n));
  }
}

void pseudo_involution(Checker& c) {
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(1, c.max_n_random());
    c.at(n);
    const Series a = c.gen().unit_series(n + 1);
    c.equal("phi_n^[-1] = (-1)^n x J_n phi_n", phi_poly(reciprocal_inverse(a), n),
            sign(n) * reversal(phi_poly(a, n), n).times_x());
  }
  for (const Rational& k : {Rational(1), Rational(2), Rational(-1, 2)}) {
    const Series a = Series::geometric(k, c.max_n() + 2);
    c.at(std::nullopt);
    c.equal("(1, x a)^-1 = (1, x a(-x))", reciprocal_inverse(a), a.scaled_arg(-1).truncated(a.order() - 1));
    for (std::size_t n = 1; n <= c.max_n(); ++n) {
      c.at(n);
      const Poly phi = phi_poly(a, n);
      c.equal("phi_n = x J_n phi_n", phi, reversal(phi, n).times_x());
    }
  }
}

void narayana_link(Checker& c) {
  for (std::size_t n = 0; n <= c.max_n(); ++n) {
    c.at(n);
    c.equal("S_n = F_n U_n^-1", exp_matrix(ExpKind::S, n),
            exp_matrix(ExpKind::F, n) * core_matrix(CoreKind::Uinv, n));
  }
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(0, c.max_n_random());
    c.at(n);
    const Series b = c.gen().invertible_series(n + 1);
    const Series a = c.gen().unit_series(n + 1);
    c.equal("S_n g_n = h_n", exp_matrix(ExpKind::S, n).apply(ord_numerator(b, a, n)), exp_numerator(b, a, n));
  }
  for (std::size_t n = 1; n <= c.max_n(); ++n) {
    c.at(n);
    const Series a = Series::geometric(1, n + 2);
    Poly narayana(n);
    for (std::size_t m = 0; m <= n; ++m) {
      const long nl = static_cast<long>(n);
      const long ml = static_cast<long>(m);
      narayana.at(m) = binom(nl, ml - 1) * binom(nl, nl - ml) / Rational(nl);
    }
    c.equal("phi_n(1/(1-x)) = (n+1)! N_n", phi_poly(a, n), narayana * factorial(static_cast<long>(n) + 1));
  }
}

void thm4_1(Checker& c) {
  for (std::size_t n = 0; n <= c.max_n(); ++n) {
    c.at(n);
    c.equal("S_n = V_n^-1 C_n V_n", exp_matrix(ExpKind::S, n),
            core_matrix(CoreKind::Vinv, n) * exp_matrix(ExpKind::C, n) * core_matrix(CoreKind::V, n));
    c.equal("S_n V_n^-1 = V_n^-1 C_n", exp_matrix(ExpKind::S, n) * core_matrix(CoreKind::Vinv, n),
            core_matrix(CoreKind::Vinv, n) * exp_matrix(ExpKind::C, n));
  }
}

void thm4_2(Checker& c) {
  for (std::size_t n = 0; n <= c.max_n(); ++n) {
    c.at(n);
    c.equal("closed S_n = F_n U_n^-1", s_closed(n), exp_matrix(ExpKind::F, n) * core_matrix(CoreKind::Uinv, n));
  }
}

void thm4_3(Checker& c) {
  for (std::size_t n = 0; n <= c.max_n(); ++n) {
    c.at(n);
    c.equal("closed S_n^-1 = U_n F_n^-1", sinv_closed(n),
            core_matrix(CoreKind::U, n) * exp_matrix(ExpKind::Finv, n));
    c.equal("closed S_n^-1 S_n = I", sinv_closed(n) * s_closed(n), FinMatrix::identity(n + 1));
  }
}

bool palindromic(const Poly& h, std::size_t n) { return reversal(h, n) == h; }

void thm4_4(Checker& c) {
  for (const Rational& k : {Rational(1), Rational(2), Rational(-1), Rational(1, 3), Rational(3)}) {
    const Series a = Series::geometric(k, c.max_n() + 1);
    c.at(std::nullopt);
    c.equal("a = 1 + x (log a)' for geometric a", log_derivative_factor(a), a);
    for (std::size_t n = 0; n <= c.max_n(); ++n) {
      c.at(n);
      const Poly h = exp_numerator(a, a, n);
      c.holds("h_n of (a, x a)_E is symmetric, a = 1/(1 - " + k.str() + " x)", palindromic(h, n), h.str());
    }
  }
}

void thm4_4_converse(Checker& c) {
  const Series a(std::vector<Rational>{1, 1, 2, 0, 0, 0});
  c.at(std::nullopt);
  c.holds("a = 1 + x + 2x^2 is not 1 + x (log a)'", !(log_derivative_factor(a) == a));
  bool broken = false;
  std::string witness;
  for (std::size_t n = 0; n <= 4; ++n) {
    const Poly h = exp_numerator(a, a, n);
    if (!palindromic(h, n)) {
      broken = true;
      witness = "n = " + std::to_string(n) + ": " + h.str();
      break;
    }
  }
  c.holds("a = 1 + x + 2x^2 has a non-symmetric h_n for some n <= 4", broken, witness);
}

void thm4_5(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n(); ++n) {
      c.at(n, beta);
      const Series a = binomial_family(beta, n + 1);
      const Poly v = array_row(RiordanArray(one(n + 1), a - one(n + 1)), n);
      const Poly phi = beta_phi_closed(n, beta);
      c.equal("phi_n = S_n alpha_n", exp_matrix(ExpKind::S, n).apply(beta_alpha_closed(n, beta)), phi);
      c.equal("phi_n = V_n^-1 C_n v_n",
              (core_matrix(CoreKind::Vinv, n) * exp_matrix(ExpKind::C, n)).apply(v), phi);
    }
  }
}

void eq3(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n(); ++n) {
      c.at(n, beta);
      const Series a = binomial_family(beta, 2 * n + 2);
      c.equal("closed form = numerator of (1, x a_beta)_E", beta_phi_closed(n, beta), phi_poly(a, n));
    }
  }
}

void phi_gf(Checker& c) {
  const std::size_t ox = 12;
  const std::size_t ot = 8;
  for (std::size_t i = 0; i < 10; ++i) {
    c.at(std::nullopt);
    const Series a = c.gen().unit_series(ox);
    c.guarded("sum phi_n(t) x^n/(n+1)! = (1-t) B(x(1-t)^2)",
              [&] { c.holds("sum phi_n(t) x^n/(n+1)! = (1-t) B(x(1-t)^2)", phi_gf_check(a, ox, ot)); });
  }
  c.holds("a = 1/(1-x)", phi_gf_check(Series::geometric(1, ox), ox, ot));
}

void column_identities(Checker& c) {
  const std::size_t N = 10;
  for (std::size_t i = 0; i < c.instances(); ++i) {
    c.at(std::nullopt);
    const Series a = c.gen().unit_series(N);
    const Series lf = log_derivative_factor(a);
    const Series xa_d = a.times_x().derivative();
    for (long m = 1; m <= 4; ++m) {
      const Series am = pow_series(a, m);
      const Series am1 = pow_series(a, m + 1);
      const Series left1 = lf * am;
      const Series left2 = xa_d * am;
      bool first = true;
      bool second = true;
      for (long n = 0; n + m <= static_cast<long>(N); ++n) {
        const auto k = static_cast<std::size_t>(n);
        first = first && left1[k] == Rational(m + n, m) * am[k];
        second = second && left2[k] == Rational(m + n + 1, m + 1) * am1[k];
      }
      c.holds("[x^n] (1 + x (log a)') a^m = ((m+n)/m) [x^n] a^m", first);
      c.holds("[x^n] (x a)' a^m = ((m+n+1)/(m+1)) [x^n] a^{m+1}", second);
    }
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n);
      const Poly u = u_row(a, n);
      const Poly row = sheffer_row(RiordanArray(xa_d, log_series(a), Flavor::Exponential), n);
      const Poly expected = Poly::linear(static_cast<long>(n) + 1) * drop_x(u).shifted(1);
      c.equal("[n,->]((x a)', log a)_E = (x+n+1) u~_n(x+1)", row, expected);
      c.equal("numerator of ((x a)', x a)_E = phi_n / x", exp_numerator(xa_d, a, n), drop_x(phi_poly(a, n)));
    }
  }
}

}  // namespace

std::vector<Suite> narayana_suites() {
  return {{"thm3.1", thm3_1},
          {"thm3.2", thm3_2},
          {"phi-gf", phi_gf},
          {"pseudo-involution", pseudo_involution},
          {"narayana-link", narayana_link},
          {"column-identities", column_identities},
          {"thm4.1", thm4_1},
          {"thm4.2", thm4_2},
          {"thm4.3", thm4_3},
          {"thm4.4", thm4_4},
          {"thm4.4-converse", thm4_4_converse},
          {"thm4.5", thm4_5},
          {"eq3", eq3}};
}

}  // namespace riordan::cli::verify
