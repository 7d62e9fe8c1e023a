// Worked examples: specific arrays whose numerators have closed forms.
#include <string>
#include <vector>

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

Rational central(std::size_t n) {
  const long nl = static_cast<long>(n);
  return factorial(2 * nl) / factorial(nl);
}

Series catalan(std::size_t order) { return binomial_family(2, order); }

Poly monomial(std::size_t k) { return Poly::monomial(k); }

std::vector<Rational> with_zero(const std::vector<Rational>& betas) {
  std::vector<Rational> out{0};
  for (const Rational& b : betas) {
    if (!b.is_zero()) out.push_back(b);
  }
  return out;
}

void ex2_1(Checker& c) {
  for (std::size_t n = 1; n <= c.max_n(); ++n) {
    c.at(n);
    const std::size_t N = n + 1;
    const Series a = one_plus_x(N) / (one(N) - xs(N));
    const Rational two_n = pow(Rational(2), static_cast<long>(n));
    c.equal("v_n = 2^n x (1/2 + x)^{n-1}", array_row(RiordanArray(one(N), a - one(N)), n),
            (Poly{R(1, 2), 1}.pow(n - 1).times_x() * two_n).with_bound(n));
    const Poly alpha = alpha_poly(a, n);
    c.equal("alpha_n = 2x (1+x)^{n-1}", alpha, Poly{1, 1}.pow(n - 1).times_x() * Rational(2));
    Poly u(n);
    for (long p = 1; p <= static_cast<long>(n); ++p) {
      u += falling_poly(p) * (binom(static_cast<long>(n) - 1, p - 1) * pow(Rational(2), p) / factorial(p));
    }
    u *= factorial(static_cast<long>(n));
    c.equal("u_n = U_n^-1 alpha_n = n! sum C(n-1, p-1) (2^p/p!) (x)_p", core_matrix(CoreKind::Uinv, n).apply(alpha), u);
    c.equal("u_n is row n of (1, log a)_E", u_row(a, n), u);
  }
}

void ex2_2(Checker& c) {
  const std::size_t N = 2 * c.max_n() + 2;
  const Series x2 = xs(N) * xs(N);
  const Series g = xs(N) * R(1, 2) + pow_series(one(N) + x2 * R(1, 4), R(1, 2));
  const Series a = g * g;
  const Series root = pow_series(one_plus_x(N), R(1, 2));
  c.at(std::nullopt);
  c.equal("a = g^2 is the generalized binomial series of 1/2", a, binomial_family(R(1, 2), N));
  c.equal("a - 1 = x g", a - one(N), g.times_x().truncated(N));
  c.equal("(1, x/sqrt(1+x))^-1 = (1, x g)", lagrange_pair(root), g);
  c.equal("1 - x (log sqrt(1+x))' = (1 + x/2)/(1+x)",
          one(N) - (root.derivative() / root).times_x().truncated(N),
          Series::from_poly(Poly{1, R(1, 2)}, N) / one_plus_x(N));
  bool coeffs = true;
  for (long m = 1; m <= 4; ++m) {
    const Series gm = pow_series(g, m);
    for (long n = 0; n + m <= static_cast<long>(N); ++n) {
      const auto k = static_cast<std::size_t>(n);
      coeffs = coeffs && gm[k] == Rational(m, m + n) * pow_series(root, m + n)[k];
    }
  }
  c.holds("[x^n] g^m = (m/(m+n)) [x^n] sqrt(1+x)^{m+n}", coeffs);
  for (std::size_t n = 1; 2 * n <= c.max_n(); ++n) {
    c.at(2 * n);
    const Poly row = Poly{R(1, 2), 1} * Poly{1, 1}.pow(n - 1).times_x(n);
    c.equal("row 2n of (1, x g) = (1/2 + x) x^n (1+x)^{n-1}", array_row(RiordanArray(one(N), g.times_x().truncated(N)), 2 * n),
            row);
    c.equal("v_2n = (1/2 + x) x^n (1+x)^{n-1}", array_row(RiordanArray(one(N), a - one(N)), 2 * n), row);
    c.equal("alpha_2n = (1/2) (1+x) x^n", alpha_poly(a, 2 * n), Poly{1, 1}.times_x(n) * R(1, 2));
    if (n <= 4) {
      Poly u{1};
      for (long m = 0; m < static_cast<long>(n); ++m) u = u * Poly{-Rational(m * m), 0, 1};
      c.equal("u_2n = prod_{m<n} (x^2 - m^2)", u_row(a, 2 * n), u);
    }
  }
}

void ex2_3(Checker& c) {
  const std::size_t ox = 8;
  const std::size_t ot = ox + 1;
  const std::vector<std::pair<Rational, Rational>> params{{1, 1}, {2, -1}, {R(1, 2), 3}, {-1, R(1, 3)}, {0, 1}};
  for (const auto& [phi, beta] : params) {
    c.at(std::nullopt);
    const std::size_t N = ox + 1;
    const Series q = Series::from_poly(Poly{1, phi, beta}, N);
    const Series a = one(N) / q;
    const RiordanArray arr(a, (xs(N) * xs(N) * beta) / q);
    const std::string tag = " (phi = " + phi.str() + ", beta = " + beta.str() + ")";
    std::vector<Poly> rows;
    for (std::size_t n = 0; n <= ox; ++n) {
      const Poly alpha = alpha_poly(a, n);
      rows.push_back(alpha);
      if (n == 0) continue;
      c.at(n);
      c.equal("alpha~_n is row n of (1/(1 + phi x + beta x^2), beta x^2/(1 + phi x + beta x^2))" + tag, drop_x(alpha),
              array_row(arr, n));
    }
    c.at(std::nullopt);
    const Poly one_t{1, -1};
    const BiSeries num =
        BiSeries::from_rows({Poly{1}, one_t * phi, one_t.pow(2) * beta}, ox, ot);
    const BiSeries den = BiSeries::from_rows({Poly{1}, Poly{phi}, one_t * beta}, ox, ot);
    c.holds("sum alpha_n(t) x^n = (1 + phi(1-t)x + beta(1-t)^2 x^2)/(1 + phi x + beta(1-t) x^2)" + tag,
            BiSeries::from_rows(rows, ox, ot) == num / den);
    c.holds("alpha generating function" + tag, alpha_gf_check(a, ox, ox));
  }
}

void ex3_1(Checker& c) {
  for (std::size_t n = 1; n <= c.max_n(); ++n) {
    c.at(n);
    const long nl = static_cast<long>(n);
    c.equal("F_n [x+n+1]_n = (2n)!/n!", exp_matrix(ExpKind::F, n).apply(rising_poly(nl, nl + 1)),
            Poly::constant(central(n)));
    const Series C = catalan(n + 2);
    c.equal("u~_n of the Catalan series = [x+n+1]_{n-1}", drop_x(u_row(C, n)), rising_poly(nl - 1, nl + 1));
    if (n <= 5) c.equal("phi_n of the Catalan series = ((2n)!/n!) x", phi_poly(C, n), monomial(1) * central(n));
  }
}

Poly narayana_poly(std::size_t n) {
  if (n == 0) return Poly{1};
  const long nl = static_cast<long>(n);
  Poly p(n);
  for (long m = 1; m <= nl; ++m) p.at(static_cast<std::size_t>(m)) = binom(nl, m) * binom(nl, m - 1) / Rational(nl);
  return p;
}

void ex3_2(Checker& c) {
  const std::size_t ox = 8;
  const std::size_t ot = ox + 2;
  const Series a = Series::geometric(1, ox + 2);
  std::vector<Poly> rows;
  for (std::size_t n = 0; n <= ox; ++n) {
    rows.push_back(narayana_poly(n));
    if (n == 0) continue;
    c.at(n);
    c.equal("phi_n(1/(1-x)) = (n+1)! N_n", phi_poly(a, n), narayana_poly(n) * factorial(static_cast<long>(n) + 1));
  }
  c.at(std::nullopt);
  std::vector<Poly> shifted{Poly{0}};
  for (std::size_t n = 0; n < ox; ++n) shifted.push_back(rows[n] * Rational(2));
  const BiSeries inner =
      BiSeries::from_rows(shifted, ox, ot) - BiSeries::from_rows({Poly{1}, Poly{1, -1}}, ox, ot);
  const BiSeries rhs = BiSeries::from_rows({Poly{1}, Poly{-2, -2}, Poly{1, -1}.pow(2)}, ox, ot);
  c.holds("(2xY - 1 - x(1-t))^2 = 1 - 2x(1+t) + x^2 (1-t)^2", inner * inner == rhs);
  c.holds("phi generating function", phi_gf_check(a, ox, ox));
}

void ex4_1(Checker& c) {
  for (std::size_t n = 0; n <= std::min<std::size_t>(c.max_n(), 6); ++n) {
    c.at(n);
    const long nl = static_cast<long>(n);
    const Series a = Series::geometric(1, n + 1);
    Poly expected(n);
    for (long m = 0; m <= nl; ++m) expected.at(static_cast<std::size_t>(m)) = factorial(nl) * binom(nl, m) * binom(nl, m);
    const Poly h = narayana_numerator(a, a, n).poly;
    c.equal("h_n of (1/(1-x), x/(1-x))_E = n! sum C(n,m)^2 x^m", h, expected);
    c.equal("h_n = S_n x^0", h, exp_matrix(ExpKind::S, n).column(0));
    c.equal("g_n of (1/(1-x), x/(1-x)) = 1", euler_numerator(a, a, n).poly, Poly{1});
  }
}

void ex4_2(Checker& c) {
  for (std::size_t n = 1; n <= c.max_n(); ++n) {
    c.at(n);
    const std::size_t N = n + 2;
    const Series p = one_plus_x(N);
    c.equal("numerator of (1+x, x(1+x)) = x^{n-1}", ord_numerator(p, p, n), monomial(n - 1));
    const Poly h = exp_numerator(p, p, n);
    c.equal("numerator of (1+x, x(1+x))_E = ((2n)!/(2 n!)) (1+x) x^{n-1}", h,
            Poly{1, 1}.times_x(n - 1) * (central(n) * R(1, 2)));
    c.equal("numerator of (1+x, x(1+x))_E = S_n x^{n-1}", h, exp_matrix(ExpKind::S, n).column(n - 1));
    const Series C = catalan(N);
    c.equal("numerator of (1 + x (log C)', x C)_E = ((2n)!/(2 n!)) (1+x)", exp_numerator(log_derivative_factor(C), C, n),
            Poly{1, 1} * (central(n) * R(1, 2)));
  }
  const std::size_t N = c.max_n() + 2;
  c.at(std::nullopt);
  const Series p = one_plus_x(N);
  const Series cm = catalan(N).scaled_arg(-1);
  const RiordanArray inv =
      riordan_inverse(RiordanArray(log_derivative_factor(p), (p.times_x()).truncated(N), Flavor::Exponential));
  c.equal("(1 + x (log(1+x))', x(1+x))_E^-1 has f = 1 + x (log C(-x))'", inv.f(), log_derivative_factor(cm));
  c.equal("(1 + x (log(1+x))', x(1+x))_E^-1 has g = x C(-x)", inv.g(), cm.times_x().truncated(N));
}

void ex4_3(Checker& c) {
  for (std::size_t n = 1; n <= c.max_n(); ++n) {
    c.at(n);
    const long nl = static_cast<long>(n);
    const std::size_t N = n + 2;
    const Series C = catalan(N);
    const Series xc_d = C.times_x().derivative();
    c.equal("numerator of ((x C)', x C)_E = (2n)!/n!", exp_numerator(xc_d, C, n), Poly::constant(central(n)));
    const Poly g = ord_numerator(xc_d, C, n);
    c.equal("numerator of ((x C)', x C) = sum C(-n, m) C(2n, n-m) x^m", g, binom_sum(-nl, 2 * nl, n, n));
    c.equal("numerator of ((x C)', x C) = ((2n)!/n!) S_n^-1 x^0", g,
            exp_matrix(ExpKind::Sinv, n).column(0) * central(n));
    c.equal("numerator of (1 + x (log C)', x/C) = (-1)^n sum C(2n, m) C(-n, n-m) x^m",
            ord_numerator(log_derivative_factor(C), one(N) / C, n),
            binom_sum(2 * nl, -nl, n, n) * Rational(n % 2 ? -1 : 1));
  }
}

void ex6_1(Checker& c) {
  for (std::size_t n = 1; n <= c.max_n(); ++n) {
    c.at(n);
    const std::size_t N = n + 2;
    const Series p = one_plus_x(N);
    const Series l1 = binomial_family(1, N);
    c.equal("numerator of (1, x(1+x)) = x^n", ord_numerator(one(N), p, n), monomial(n));
    c.equal("numerator of (1, x/(1-x)) = x", ord_numerator(one(N), l1, n), monomial(1));
    c.equal("numerator of (1+x, x(1+x)) = x^{n-1}", ord_numerator(p, p, n), monomial(n - 1));
    c.equal("numerator of (1/(1-x), x/(1-x)) = 1", ord_numerator(l1, l1, n), Poly{1});
  }
  for (const Rational& beta : with_zero(c.betas())) {
    for (std::size_t n = 1; n <= c.max_n(); ++n) {
      c.at(n, beta);
      const std::size_t N = n + 2;
      const Series lb = binomial_family(beta, N);
      const Series lb1 = binomial_family(beta + 1, N);
      const FinMatrix G = beta_matrix(BetaKind::G, n, beta);
      c.equal("G x^n = numerator of (1 + x (log L_b^b)', x L_b)", G.column(n),
              ord_numerator(power_log_factor(lb, beta), lb, n));
      c.equal("G x = numerator of (1 + x (log L_{b+1}^b)', x L_{b+1})", G.column(1),
              ord_numerator(power_log_factor(lb1, beta), lb1, n));
      c.equal("G x^{n-1} = numerator of (L_b (1 + x (log L_b^b)'), x L_b)", G.column(n - 1),
              ord_numerator(lb * power_log_factor(lb, beta), lb, n));
      c.equal("G x^0 = numerator of (L_{b+1} (1 + x (log L_{b+1}^b)'), x L_{b+1})", G.column(0),
              ord_numerator(lb1 * power_log_factor(lb1, beta), lb1, n));
      c.equal("G^b x^0 = G^{b+1} x^n", G.column(0), beta_matrix(BetaKind::G, n, beta + 1).column(n));
      c.equal("L_b (1 + x (log L_b^{b-1})') = 1 + x (log L_b^b)'", lb * power_log_factor(lb, beta - 1),
              power_log_factor(lb, beta));
      const FinMatrix Gm = beta_matrix(BetaKind::G, n, -beta);
      c.equal("G^-b x^0 = J G^b x^n", Gm.column(0), reversal(G.column(n), n));
      c.equal("G^-b x = J G^b x^{n-1}", Gm.column(1), reversal(G.column(n - 1), n));
    }
  }
}

void ex7_1(Checker& c) {
  for (const Rational& beta : with_zero(c.betas())) {
    for (std::size_t n = 1; n <= c.max_n(); ++n) {
      c.at(n, beta);
      const long nl = static_cast<long>(n);
      const Rational nb = beta * Rational(nl);
      const std::size_t N = n + 2;
      const Rational k = central(n);
      const Series lb = binomial_family(beta, N);
      const Series lb2 = binomial_family(beta + 2, N);
      const FinMatrix H = beta_matrix(BetaKind::H, n, beta);
      const Poly col_n = H.column(n);
      const Poly col_0 = H.column(0);
      const Poly col_1 = H.column(1);
      const Poly col_n1 = H.column(n - 1);
      const Poly one_x_top = col_n1 + col_n;
      const Poly one_x_bottom = col_0 + col_1;
      c.equal("c H x^n = numerator of (1 + x (log L_b^b)', x L_b)_E", col_n * k,
              exp_numerator(power_log_factor(lb, beta), lb, n));
      c.equal("c H x^0 = numerator of (1 + x (log L_{b+2}^{b+2})', x L_{b+2})_E", col_0 * k,
              exp_numerator(power_log_factor(lb2, beta + 2), lb2, n));
      c.equal("H^b x^0 = H^{b+2} x^n", col_0, beta_matrix(BetaKind::H, n, beta + 2).column(n));
      c.equal("c H x = numerator of (1 + x (log L_{b+2}^b)', x L_{b+2})_E", col_1 * k,
              exp_numerator(power_log_factor(lb2, beta), lb2, n));
      c.equal("c H x^{n-1} = numerator of (L_b (1 + x (log L_b^{b+1})'), x L_b)_E", col_n1 * k,
              exp_numerator(lb * power_log_factor(lb, beta + 1), lb, n));
      c.equal("(c/2) H (1+x) x^{n-1} = numerator of (L_b (1 + x (log L_b^b)'), x L_b)_E", one_x_top * (k * R(1, 2)),
              exp_numerator(lb * power_log_factor(lb, beta), lb, n));
      c.equal("(c/2) H (1+x) = numerator of (1 + x (log L_{b+2}^{b+1})', x L_{b+2})_E", one_x_bottom * (k * R(1, 2)),
              exp_numerator(power_log_factor(lb2, beta + 1), lb2, n));
      const Rational scale = binom(2 * nl - 1, nl - 1);
      c.equal("C(2n-1, n-1) H (1+x) x^{n-1} = sum C(2n-1-nb, m) C(nb+1, n-m) x^m", one_x_top * scale,
              binom_sum(Rational(2 * nl - 1) - nb, nb + 1, n, n));
      c.equal("C(2n-1, n-1) H (1+x) = sum C(1-nb, m) C(nb+2n-1, n-m) x^m", one_x_bottom * scale,
              binom_sum(Rational(1) - nb, nb + Rational(2 * nl - 1), n, n));
    }
  }
}

void ex8_1(Checker& c) {
  const std::size_t top = c.max_n_random();
  const std::size_t N = top + 2;
  const std::vector<std::pair<std::string, Series>> inputs{
      {"1/(1-x)", Series::geometric(1, N)}, {"1+x", one_plus_x(N)}, {"e^x", exp_series(xs(N))}};
  for (const auto& [name, a] : inputs) {
    for (std::size_t n = 1; n <= top; ++n) {
      for (std::size_t m = 1; m <= 4; ++m) {
        c.at(n);
        const std::string tag = " (a = " + name + ", m = " + std::to_string(m) + ")";
        const Series am = pow_series(a, static_cast<long>(m));
        c.equal("W_(n,m) alpha~_n(a) = alpha~_n(a^m)" + tag, amazing_matrix(n, m).apply(drop_x(alpha_poly(a, n))),
                drop_x(alpha_poly(am, n)));
        c.equal("W_(n,m) = Ut_n diag(m^{p+1}) Ut_n^-1" + tag, amazing_matrix(n, m), amazing_conjugated(n, m));
      }
    }
    c.at(std::nullopt);
    for (long m = 1; m <= 4; ++m) {
      const Series lift = pow_series(one_plus_x(N), m) - one(N);
      const RiordanArray prod = riordan_mul(RiordanArray(one(N), a - one(N)), RiordanArray(one(N), lift));
      c.equal("(1, a-1)(1, (1+x)^m - 1) = (1, a^m - 1) (a = " + name + ", m = " + std::to_string(m) + ")", prod.g(),
              pow_series(a, m) - one(N));
    }
  }
}

}  // namespace

std::vector<Suite> example_suites() {
  return {{"ex2.1", ex2_1}, {"ex2.2", ex2_2}, {"ex2.3", ex2_3}, {"ex3.1", ex3_1},
          {"ex3.2", ex3_2}, {"ex4.1", ex4_1}, {"ex4.2", ex4_2}, {"ex4.3", ex4_3},
          {"ex6.1", ex6_1}, {"ex7.1", ex7_1}, {"ex8.1", ex8_1}};
}

}  // namespace riordan::cli::verify
