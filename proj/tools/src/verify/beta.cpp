// The G and H families, their closed forms and the duality of the
// generalized binomial numerators.
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

Rational times(std::size_t n, const Rational& beta) { return Rational(static_cast<long>(n)) * beta; }

void thm6_1(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n, beta);
      const FinMatrix j = core_matrix(CoreKind::J, n);
      c.equal("G_n^-beta = J_n G_n^beta J_n", beta_matrix(BetaKind::G, n, -beta),
              j * beta_matrix(BetaKind::G, n, beta) * j);
      c.equal("G_n^-beta = (G_n^beta)^-1", beta_matrix(BetaKind::G, n, -beta),
              beta_matrix(BetaKind::G, n, beta).inverse());
    }
  }
}

void thm6_2(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      const Rational nb = times(n, beta);
      if (!is_natural(nb)) continue;
      c.at(n, beta);
      c.equal("G_n^beta = V_n^-1 ((1+x)^{n beta}, x)^T V_n", beta_matrix(BetaKind::G, n, beta),
              core_matrix(CoreKind::Vinv, n) * binomial_band_transpose(n, nb.to_long()) * core_matrix(CoreKind::V, n));
    }
  }
  for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
    c.at(n);
    const FinMatrix x = beta_matrix(BetaKind::X, n, 0);
    c.equal("X_n = V_n^-1 (x, x)^T V_n", x,
            core_matrix(CoreKind::Vinv, n) * toeplitz(xs(n + 1), n + 1, n + 1).transpose() *
                core_matrix(CoreKind::V, n));
    c.equal("I_n + X_n = G_n^{1/n} = U_n E U_n^-1", FinMatrix::identity(n + 1) + x,
            beta_matrix(BetaKind::G, n, Rational(1, static_cast<long>(n))));
    c.equal("U_n E U_n^-1 = I_n + X_n",
            core_matrix(CoreKind::U, n) * shift_matrix(n, 1) * core_matrix(CoreKind::Uinv, n),
            FinMatrix::identity(n + 1) + x);
    for (const Rational& beta : c.betas()) {
      c.at(n, beta);
      FinMatrix sum(n + 1, n + 1);
      FinMatrix power = FinMatrix::identity(n + 1);
      for (std::size_t m = 0; m <= n; ++m) {
        sum += binom(times(n, beta), static_cast<long>(m)) * power;
        power = power * x;
      }
      c.equal("G_n^beta = sum C(n beta, m) X_n^m", beta_matrix(BetaKind::G, n, beta), sum);
    }
  }
}

void thm6_3(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n, beta);
      c.equal("closed G_n^beta = U_n E^{n beta} U_n^-1", beta_closed(BetaKind::G, n, beta),
              beta_conjugated(BetaKind::G, n, beta));
    }
  }
  for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
    c.at(n);
    c.equal("closed X_n = V_n^-1 (x,x)^T V_n", beta_closed(BetaKind::X, n, 0), beta_conjugated(BetaKind::X, n, 0));
  }
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(1, c.max_n_random());
    const Rational& beta = c.betas()[c.gen().index(0, c.betas().size() - 1)];
    c.at(n, beta);
    const std::size_t N = n + 2;
    const Series b = c.gen().invertible_series(N);
    const Series a = c.gen().unit_series(N);
    c.guarded("G_n^beta g_n = numerator of the beta-transformed array", [&] {
      const Series L = gen_lagrange_series(a, beta, N);
      const Series bl = table_row(b, a, beta, 1, 0);
      c.equal("G_n^beta g_n = numerator of the beta-transformed array",
              beta_matrix(BetaKind::G, n, beta).apply(ord_numerator(b, a, n)), ord_numerator(bl, L, n));
    });
  }
}

void thm7_1(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n, beta);
      const FinMatrix j = core_matrix(CoreKind::J, n);
      c.equal("H_n^-beta = J_n H_n^beta J_n", beta_matrix(BetaKind::H, n, -beta),
              j * beta_matrix(BetaKind::H, n, beta) * j);
    }
  }
}

void thm7_2(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n, beta);
      const FinMatrix h = beta_matrix(BetaKind::H, n, beta);
      c.equal("closed H_n^beta = F_n E^{n beta} F_n^-1", beta_closed(BetaKind::H, n, beta),
              beta_conjugated(BetaKind::H, n, beta));
      c.equal("H_n^beta = S_n G_n^beta S_n^-1", h,
              exp_matrix(ExpKind::S, n) * beta_matrix(BetaKind::G, n, beta) * exp_matrix(ExpKind::Sinv, n));
      const Rational nb = times(n, beta);
      const long nl = static_cast<long>(n);
      const Rational central = binom(2 * nl, nl).inverse();
      c.equal("H_n^beta x^n", h.column(n), binom_sum(2 * nl - nb, nb, n, n) * central);
      c.equal("H_n^beta x^0", h.column(0), binom_sum(-nb, nb + Rational(2 * nl), n, n) * central);
      if (is_natural(nb)) {
        const FinMatrix cm = exp_matrix(ExpKind::C, n);
        c.equal("H_n^beta = V_n^-1 C_n ((1+x)^{n beta}, x)^T C_n^-1 V_n", h,
                core_matrix(CoreKind::Vinv, n) * cm * binomial_band_transpose(n, nb.to_long()) * cm.inverse() *
                    core_matrix(CoreKind::V, n));
      }
    }
  }
  for (std::size_t i = 0; i < c.instances(); ++i) {
    const std::size_t n = c.gen().index(1, c.max_n_random());
    const Rational& beta = c.betas()[c.gen().index(0, c.betas().size() - 1)];
    c.at(n, beta);
    const std::size_t N = n + 2;
    const Series b = c.gen().invertible_series(N);
    const Series a = c.gen().unit_series(N);
    c.guarded("H_n^beta h_n = numerator of the beta-transformed array", [&] {
      const Series L = gen_lagrange_series(a, beta, N);
      const Series bl = table_row(b, a, beta, 1, 0);
      c.equal("H_n^beta h_n = numerator of the beta-transformed array",
              beta_matrix(BetaKind::H, n, beta).apply(exp_numerator(b, a, n)), exp_numerator(bl, L, n));
    });
  }
}

void col_sums(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n, beta);
      const std::vector<Rational> ones(n + 1, Rational(1));
      c.holds("column sums of G_n^beta are 1", beta_matrix(BetaKind::G, n, beta).column_sums() == ones);
      c.holds("column sums of H_n^beta are 1", beta_matrix(BetaKind::H, n, beta).column_sums() == ones);
    }
  }
  for (std::size_t n = 0; n <= c.max_n(); ++n) {
    const long nl = static_cast<long>(n);
    for (long p = 0; p <= nl; ++p) {
      c.at(n);
      Rational first;
      Rational second;
      for (long m = 0; m <= nl; ++m) {
        const Rational common = ((nl - m) % 2 ? -1 : 1) * binom(2 * nl + 1, nl - m) * binom(m + nl, nl);
        first += common * pow(Rational(m), p);
        second += common * pow(Rational(m + 1), p);
      }
      const Rational sign = (nl + p) % 2 ? -1 : 1;
      c.equal("sum (-1)^{n-m} C(2n+1, n-m) m^p C(m+n, n) = (-1)^{n+p} (n+1)^p", first,
              sign * pow(Rational(nl + 1), p));
      c.equal("sum (-1)^{n-m} C(2n+1, n-m) (m+1)^p C(m+n, n) = (-1)^{n+p} n^p", second, sign * pow(Rational(nl), p));
    }
  }
  for (std::size_t n = 0; n <= c.max_n(); ++n) {
    c.at(n);
    const FinMatrix f = exp_matrix(ExpKind::F, n);
    const FinMatrix fe = f * shift_matrix(n, 1);
    bool first = true;
    bool second = true;
    for (std::size_t p = 0; p <= n; ++p) {
      const long e = static_cast<long>(n + p);
      first = first && f(n, p) == Rational(e % 2 ? -1 : 1) * pow(Rational(static_cast<long>(n) + 1), static_cast<long>(p));
      second = second && fe(n, p) == Rational(e % 2 ? -1 : 1) * pow(Rational(static_cast<long>(n)), static_cast<long>(p));
    }
    c.holds("row n of F_n is ((-1)^{n+p} (n+1)^p)", first);
    c.holds("row n of F_n E is ((-1)^{n+p} n^p)", second);
  }
}

FinMatrix reduce(const FinMatrix& m, std::size_t size, std::size_t k) {
  const Series down = pow_series(one(size) - xs(size), -static_cast<long>(k));
  const Series up = pow_series(one(size) - xs(size), static_cast<long>(k));
  return toeplitz(down, size, size) * m * toeplitz(up, size, size) * inclusion(size, size - k);
}

void reductions(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      for (std::size_t m = 0; m < n; ++m) {
        c.at(n, beta);
        const Rational target = times(n, beta) / Rational(static_cast<long>(n - m));
        c.equal("((1-x)^-m, x) G_n^beta ((1-x)^m, x) I = G_{n-m}^{n beta/(n-m)}",
                reduce(beta_matrix(BetaKind::G, n, beta), n + 1, m),
                inclusion(n + 1, n - m + 1) * beta_matrix(BetaKind::G, n - m, target));
        if (m + 1 < n) {
          c.equal("((1-x)^-m, x) A_n^beta ((1-x)^m, x) I = A_{n-m}^{n beta/(n-m)}",
                  reduce(beta_matrix(BetaKind::A, n, beta), n, m),
                  inclusion(n, n - m) * beta_matrix(BetaKind::A, n - m, target));
        }
      }
    }
  }
}

void duality(Checker& c) {
  for (const Rational& beta : {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
    const std::size_t N = 2 * c.max_n_random() + 2;
    const Series a = binomial_family(beta, N);
    c.at(std::nullopt, beta);
    c.equal("a_{1-beta}(x) = 1/a_beta(-x)", binomial_family(1 - beta, N), one(N) / a.scaled_arg(-1));
    c.equal("(1, x a_beta)^-1 = (1, x / a_{beta-1})", reversion(a.times_x()).over_x(),
            one(N) / binomial_family(beta - 1, N));
    for (std::size_t n = 1; n <= c.max_n_random(); ++n) {
      c.at(n, beta);
      c.equal("alpha_n(a_{1-beta}) = x J_n alpha_n(a_beta)", alpha_poly(binomial_family(1 - beta, N), n),
              reversal(alpha_poly(a, n), n).times_x());
      c.equal("phi_n(a_{2-beta}) = x J_n phi_n(a_beta)", phi_poly(binomial_family(2 - beta, N), n),
              reversal(phi_poly(a, n), n).times_x());
      c.equal("closed alpha_n: 1-beta against beta", beta_alpha_closed(n, 1 - beta),
              reversal(beta_alpha_closed(n, beta), n).times_x());
      c.equal("closed phi_n: 2-beta against beta", beta_phi_closed(n, 2 - beta),
              reversal(beta_phi_closed(n, beta), n).times_x());
    }
  }
}

}  // namespace

std::vector<Suite> beta_suites() {
  return {{"thm6.1", thm6_1},         {"thm6.2", thm6_2},     {"thm6.3", thm6_3},     {"thm7.1", thm7_1},
          {"thm7.2", thm7_2},         {"col-sums", col_sums}, {"reductions", reductions}, {"duality", duality}};
}

}  // namespace riordan::cli::verify
