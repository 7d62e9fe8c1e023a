// The n x n families acting on numerators divided by x: Ut, Ft, W, A and T.
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

Rational times(std::size_t n, const Rational& beta) { return Rational(static_cast<long>(n)) * beta; }

/// (x, x) as an (n+1) x n matrix.
FinMatrix times_x_matrix(std::size_t n) {
  FinMatrix m(n + 1, n);
  for (std::size_t p = 0; p < n; ++p) m(p + 1, p) = 1;
  return m;
}

FinMatrix w_matrix(std::size_t n, std::size_t m) { return amazing_matrix(n, m); }

/// ((1 - x^m)/(1 - x))^{n+1} as a series of the given order.
Series w_series(std::size_t n, std::size_t m, std::size_t order) {
  Series base(order);
  for (std::size_t k = 0; k < m && k <= order; ++k) base.at(k) = 1;
  return pow_series(base, static_cast<long>(n + 1));
}

Poly tilde_alpha(const Series& a, std::size_t n) { return drop_x(alpha_poly(a, n)); }
Poly tilde_phi(const Series& a, std::size_t n) { return drop_x(phi_poly(a, n)); }

void thm8_1(Checker& c) {
  for (std::size_t n = 1; n <= c.max_n(); ++n) {
    c.at(n);
    const FinMatrix ut = tilde_matrix(TildeKind::Ut, n);
    const FinMatrix utinv = tilde_matrix(TildeKind::Utinv, n);
    const FinMatrix xx = times_x_matrix(n);
    c.equal("Ut_n Ut_n^-1 = I", ut * utinv, FinMatrix::identity(n));
    c.equal("Ut_n (1,-x) Ut_n^-1 = (-1)^{n-1} Jt_n", ut * reflect_matrix(n - 1) * utinv,
            sign(n - 1) * tilde_matrix(TildeKind::Jt, n));
    c.equal("Ut_n = (x,x)^T U_n (x,x)", ut, xx.transpose() * core_matrix(CoreKind::U, n) * xx);
    c.equal("Ut_n^-1 = (x,x)^T U_n^-1 (x,x)", utinv, xx.transpose() * core_matrix(CoreKind::Uinv, n) * xx);
    c.equal("U_n E (x,x) = Ut_n with a zero last row", core_matrix(CoreKind::U, n) * shift_matrix(n, 1) * xx,
            inclusion(n + 1, n) * ut);
    c.equal("E^-1 U_n^-1 I_{n-1} = (x,x) Ut_n^-1",
            shift_matrix(n, -1) * core_matrix(CoreKind::Uinv, n) * inclusion(n + 1, n), xx * utinv);
  }
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(1, c.max_n_random());
    c.at(n);
    const Series a = c.gen().unit_series(n + 1);
    const Poly u = u_row(a, n);
    c.equal("Ut_n u~_n = alpha~_n", tilde_matrix(TildeKind::Ut, n).apply(drop_x(u)), tilde_alpha(a, n));
  }
}

void thm8_2(Checker& c) {
  for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      c.at(n);
      const std::string tag = " (m = " + std::to_string(m) + ")";
      const Series w = w_series(n, m, m * n + m);
      c.equal("W_(n,m) = (w_m^{n+1}, x)_m It_n" + tag, amazing_conjugated(n, m), strided_matrix(w, m, n));
      const Series lift = (pow_series(one_plus_x(n), static_cast<long>(m)) - one(n)).truncated(n);
      const RiordanArray band(lift.over_x(), lift);
      c.equal("W_(n,m) = Vt^-1 (((1+x)^m - 1)/x, (1+x)^m - 1)^T Vt" + tag, w_matrix(n, m),
              tilde_matrix(TildeKind::Vt, n).inverse() * riordan_matrix(band, n).transpose() *
                  tilde_matrix(TildeKind::Vt, n));
    }
  }
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(1, c.max_n_random());
    const std::size_t m = c.gen().index(1, 4);
    c.at(n);
    const Series a = c.gen().unit_series(n + 1);
    c.equal("W_(n,m) alpha~_n(a) = alpha~_n(a^m)", w_matrix(n, m).apply(tilde_alpha(a, n)),
            tilde_alpha(pow_series(a, static_cast<long>(m)), n));
  }
}

void thm8_3(Checker& c) {
  for (std::size_t n = 1; n <= c.max_n(); ++n) {
    c.at(n);
    const FinMatrix ft = tilde_matrix(TildeKind::Ft, n);
    const FinMatrix ftinv = tilde_matrix(TildeKind::Ftinv, n);
    c.equal("Ft_n Ft_n^-1 = I", ft * ftinv, FinMatrix::identity(n));
    c.equal("Ft_n E^n (1,-x) Ft_n^-1 = (-1)^{n-1} Jt_n",
            ft * shift_matrix(n - 1, static_cast<long>(n)) * reflect_matrix(n - 1) * ftinv,
            sign(n - 1) * tilde_matrix(TildeKind::Jt, n));
    const FinMatrix xx = times_x_matrix(n);
    c.equal("Ft_n = (x,x)^T F_n (x,x)", ft, xx.transpose() * exp_matrix(ExpKind::F, n) * xx);
    const Series shift_n = Series::from_poly(Poly{Rational(static_cast<long>(n)), 1}, n);
    const FinMatrix times_shift = toeplitz(shift_n, n + 1, n + 1);
    c.equal("F_n E (x+n, x) I_{n-1} = Ft_n with a zero last row",
            exp_matrix(ExpKind::F, n) * shift_matrix(n, 1) * times_shift * inclusion(n + 1, n),
            inclusion(n + 1, n) * ft);
    const Series shift_n1 = Series::from_poly(Poly{Rational(static_cast<long>(n) + 1), 1}, n);
    c.equal("F_n (x+n+1, x) E I_{n-1} = Ft_n with a zero last row",
            exp_matrix(ExpKind::F, n) * toeplitz(shift_n1, n + 1, n + 1) * shift_matrix(n, 1) * inclusion(n + 1, n),
            inclusion(n + 1, n) * ft);
    c.equal("(x+n, x)^-1 E^-1 F_n^-1 I_{n-1} = Ft_n^-1 with a zero last row",
            times_shift.inverse() * shift_matrix(n, -1) * exp_matrix(ExpKind::Finv, n) * inclusion(n + 1, n),
            inclusion(n + 1, n) * ftinv);
    const FinMatrix vt = tilde_matrix(TildeKind::Vt, n);
    c.equal("St_n = Vt_n^-1 Ct_n Vt_n", tilde_matrix(TildeKind::St, n),
            vt.inverse() * tilde_matrix(TildeKind::Ct, n) * vt);
    c.equal("St_n = Ft_n Ut_n^-1", tilde_matrix(TildeKind::St, n), ft * tilde_matrix(TildeKind::Utinv, n));
  }
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(1, c.max_n_random());
    c.at(n);
    const Series a = c.gen().unit_series(n + 1);
    const Poly phi = tilde_phi(a, n);
    c.equal("Ft_n u~_n = phi~_n", tilde_matrix(TildeKind::Ft, n).apply(drop_x(u_row(a, n))), phi);
    c.equal("St_n alpha~_n = phi~_n", tilde_matrix(TildeKind::St, n).apply(tilde_alpha(a, n)), phi);
  }
}

void w_amazing(Checker& c) {
  for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
    const Poly euler = drop_x(eulerian(static_cast<long>(n)));
    const FinMatrix jt = tilde_matrix(TildeKind::Jt, n);
    for (std::size_t m = 1; m <= 4; ++m) {
      c.at(n);
      const std::string tag = " (m = " + std::to_string(m) + ")";
      const FinMatrix w = w_matrix(n, m);
      const Rational mn = pow(Rational(static_cast<long>(m)), static_cast<long>(n));
      c.holds("column sums of W_(n,m) are m^n" + tag, w.column_sums() == std::vector<Rational>(n, mn));
      c.equal("W_(n,m) A~_n = m^n A~_n" + tag, w.apply(euler), euler * mn);
      c.equal("W_(n,m) Jt_n = Jt_n W_(n,m)" + tag, w * jt, jt * w);
      for (std::size_t p = 1; p <= 4; ++p) {
        c.equal("W_(n,m) W_(n,p) = W_(n,mp)" + tag + " p = " + std::to_string(p), w * w_matrix(n, p),
                w_matrix(n, m * p));
      }
      for (std::size_t p = 0; p + 1 < n; ++p) {
        const Series down = pow_series(one(n) - xs(n), -static_cast<long>(p));
        const Series up = pow_series(one(n) - xs(n), static_cast<long>(p));
        c.equal("((1-x)^-p, x) W_(n,m) ((1-x)^p, x) It_{n-p} = W_(n-p,m)" + tag + " p = " + std::to_string(p),
                toeplitz(down, n, n) * w * toeplitz(up, n, n) * inclusion(n, n - p),
                inclusion(n, n - p) * w_matrix(n - p, m));
      }
    }
  }
}

void thm9_1(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n, beta);
      const FinMatrix jt = tilde_matrix(TildeKind::Jt, n);
      c.equal("A_n^-beta = Jt_n A_n^beta Jt_n", beta_matrix(BetaKind::A, n, -beta),
              jt * beta_matrix(BetaKind::A, n, beta) * jt);
    }
  }
}

void thm9_2(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      const Rational nb = times(n, beta);
      if (!is_natural(nb)) continue;
      c.at(n, beta);
      const FinMatrix vt = tilde_matrix(TildeKind::Vt, n);
      const FinMatrix dt = tilde_matrix(TildeKind::Dt, n);
      c.equal("A_n^beta = Vt^-1 Dt ((1+x)^{n beta}, x)^T Dt^-1 Vt", beta_matrix(BetaKind::A, n, beta),
              vt.inverse() * dt * binomial_band_transpose(n - 1, nb.to_long()) * dt.inverse() * vt);
    }
  }
}

void thm9_3(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n, beta);
      const FinMatrix a = beta_matrix(BetaKind::A, n, beta);
      c.equal("closed A_n^beta = Ut_n E^{n beta} Ut_n^-1", beta_closed(BetaKind::A, n, beta),
              beta_conjugated(BetaKind::A, n, beta));
      const Rational nb = times(n, beta);
      const long nl = static_cast<long>(n);
      const Rational inv_n = Rational(1, nl);
      c.equal("A_n^beta x^{n-1}", a.column(n - 1), binom_sum(Rational(nl) - nb, nb, n - 1, n - 1) * inv_n);
      c.equal("A_n^beta x^0", a.column(0), binom_sum(-nb, Rational(nl) + nb, n - 1, n - 1) * inv_n);
      c.equal("A_n^beta x^{n-1} = closed alpha~_n for beta", a.column(n - 1), drop_x(beta_alpha_closed(n, beta)));
      c.equal("A_n^beta x^0 = closed alpha~_n for beta + 1", a.column(0), drop_x(beta_alpha_closed(n, beta + 1)));
    }
  }
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(1, c.max_n_random());
    const Rational& beta = c.betas()[c.gen().index(0, c.betas().size() - 1)];
    c.at(n, beta);
    const std::size_t N = n + 2;
    const Series a = c.gen().unit_series(N);
    c.guarded("A_n^beta alpha~_n(a) = alpha~_n(a_beta)", [&] {
      const Series L = gen_lagrange_series(a, beta, N);
      c.equal("A_n^beta alpha~_n(a) = alpha~_n(a_beta)", beta_matrix(BetaKind::A, n, beta).apply(tilde_alpha(a, n)),
              tilde_alpha(L, n));
    });
  }
}

void thm9_4(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n, beta);
      const FinMatrix jt = tilde_matrix(TildeKind::Jt, n);
      c.equal("T_n^-beta = Jt_n T_n^beta Jt_n", beta_matrix(BetaKind::T, n, -beta),
              jt * beta_matrix(BetaKind::T, n, beta) * jt);
    }
  }
}

void thm9_5(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n, beta);
      const FinMatrix t = beta_matrix(BetaKind::T, n, beta);
      c.equal("closed T_n^beta = Ft_n E^{n beta} Ft_n^-1", beta_closed(BetaKind::T, n, beta),
              beta_conjugated(BetaKind::T, n, beta));
      const FinMatrix st = tilde_matrix(TildeKind::St, n);
      c.equal("T_n^beta = St_n A_n^beta St_n^-1", t, st * beta_matrix(BetaKind::A, n, beta) * st.inverse());
      const Rational nb = times(n, beta);
      const long nl = static_cast<long>(n);
      const Rational central = binom(2 * nl, nl - 1).inverse();
      c.equal("T_n^beta x^{n-1}", t.column(n - 1), binom_sum(Rational(2 * nl) - nb, nb, n - 1, n - 1) * central);
      c.equal("T_n^beta x^0", t.column(0), binom_sum(-nb, Rational(2 * nl) + nb, n - 1, n - 1) * central);
      const Rational scale = factorial(nl) / factorial(2 * nl);
      c.equal("T_n^beta x^{n-1} = closed phi~_n for beta", t.column(n - 1), drop_x(beta_phi_closed(n, beta)) * scale);
      c.equal("T_n^beta x^0 = closed phi~_n for beta + 2", t.column(0), drop_x(beta_phi_closed(n, beta + 2)) * scale);
      if (is_natural(nb)) {
        const FinMatrix vt = tilde_matrix(TildeKind::Vt, n);
        const FinMatrix cd = tilde_matrix(TildeKind::Ct, n) * tilde_matrix(TildeKind::Dt, n);
        c.equal("T_n^beta = Vt^-1 Ct Dt ((1+x)^{n beta}, x)^T (Ct Dt)^-1 Vt", t,
                vt.inverse() * cd * binomial_band_transpose(n - 1, nb.to_long()) * cd.inverse() * vt);
      }
    }
  }
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(1, c.max_n_random());
    const Rational& beta = c.betas()[c.gen().index(0, c.betas().size() - 1)];
    c.at(n, beta);
    const std::size_t N = n + 2;
    const Series a = c.gen().unit_series(N);
    c.guarded("T_n^beta phi~_n(a) = phi~_n(a_beta)", [&] {
      const Series L = gen_lagrange_series(a, beta, N);
      c.equal("T_n^beta phi~_n(a) = phi~_n(a_beta)", beta_matrix(BetaKind::T, n, beta).apply(tilde_phi(a, n)),
              tilde_phi(L, n));
    });
  }
}

}  // namespace

std::vector<Suite> tilde_suites() {
  return {{"thm8.1", thm8_1}, {"thm8.2", thm8_2}, {"thm8.3", thm8_3}, {"w-amazing", w_amazing},
          {"thm9.1", thm9_1}, {"thm9.2", thm9_2}, {"thm9.3", thm9_3}, {"thm9.4", thm9_4},
          {"thm9.5", thm9_5}};
}

}  // namespace riordan::cli::verify
