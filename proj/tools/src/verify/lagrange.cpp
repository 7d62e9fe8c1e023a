// Lagrange inversion, generalized Lagrange series and their coefficient formulas.
#include <string>

#include "harness.hpp"
#include "riordan/array.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/genlagrange.hpp"
#include "toolkit.hpp"

namespace riordan::cli::verify {

namespace {

/// a with a_1 != 0, so that log a is reversible.
Series steep_series(SeriesGen& gen, std::size_t order) {
  Series a = gen.unit_series(order);
  a.at(1) = gen.nonzero();
  return a;
}

/// Column n of (1, q)_E: entry k is (k!/n!) [x^k] q^n.
Series exp_column(const Series& q, std::size_t n) {
  const Series qn = pow_series(q, static_cast<long>(n));
  Series col(q.order());
  for (std::size_t k = n; k <= q.order(); ++k) {
    col.at(k) = factorial(static_cast<long>(k)) / factorial(static_cast<long>(n)) * qn[k];
  }
  return col;
}

void pair_identities(Checker& c) {
  const std::size_t N = 10;
  for (std::size_t i = 0; i < c.instances(); ++i) {
    c.at(std::nullopt);
    const Series a = c.gen().unit_series(N);
    const Series b = lagrange_pair(a);
    const Series lf_a = one(N) - (a.derivative() / a).times_x().truncated(N);
    const Series lf_b = log_derivative_factor(b);
    bool first = true;
    bool second = true;
    bool third = true;
    for (long m = 1; m <= 4; ++m) {
      const Series bm = pow_series(b, m);
      const Series lbm = lf_b * bm;
      for (long n = 0; n + m <= static_cast<long>(N); ++n) {
        const auto k = static_cast<std::size_t>(n);
        const Series amn = pow_series(a, m + n);
        first = first && bm[k] == Rational(m, m + n) * amn[k];
        second = second && bm[k] == (lf_a * amn)[k];
        third = third && lbm[k] == amn[k];
      }
    }
    c.holds("[x^n] b^m = (m/(m+n)) [x^n] a^{m+n}", first);
    c.holds("[x^n] b^m = [x^n] (1 - x (log a)') a^{m+n}", second);
    c.holds("[x^n] (1 + x (log b)') b^m = [x^n] a^{m+n}", third);
    const RiordanArray inv = riordan_inverse(RiordanArray(lf_a, (one(N) / a).times_x().truncated(N)));
    c.equal("(1 - x (log a)', x/a)^-1 has first column 1 + x (log b)'", inv.f(), lf_b);
    c.equal("(1 - x (log a)', x/a)^-1 has second column generator x b", inv.g(), b.times_x().truncated(N));
  }
}

void fixed_point(Checker& c) {
  const std::size_t N = 12;
  for (const Rational& beta : c.betas()) {
    c.at(std::nullopt, beta);
    for (std::size_t i = 0; i < 3; ++i) {
      const Series a = c.gen().unit_series(N);
      const Series L = gen_lagrange_series(a, beta, N);
      const Series xlb = pow_series(L, beta).times_x().truncated(N);
      c.equal("L = a(x L^beta)", compose(a, xlb), L);
      c.equal("reversion of x a^-beta = x L^beta", reversion(pow_series(a, -beta).times_x().truncated(N)), xlb);
      c.equal("generalized_lagrange agrees with gen_lagrange_series", generalized_lagrange(a, beta), L);
    }
  }
}

void coefficient_formula(Checker& c) {
  const std::size_t N = 8;
  for (const Rational& beta : c.betas()) {
    const Series a = c.gen().unit_series(N);
    const Series L = gen_lagrange_series(a, beta, N);
    for (std::size_t i = 0; i < 3; ++i) {
      const Rational phi = c.gen().nonzero();
      const Series lphi = pow_series(L, phi);
      for (std::size_t n = 0; n <= N; ++n) {
        c.at(n, beta);
        const Rational shift = phi + beta * Rational(static_cast<long>(n));
        if (shift.is_zero()) continue;
        c.equal("[x^n] L^phi = (phi/(phi + beta n)) u_n(phi + beta n)/n!", lphi[n],
                phi / shift * u_row(a, n).eval(shift) / factorial(static_cast<long>(n)));
      }
    }
  }
}

void u_transform(Checker& c) {
  for (const Rational& beta : c.betas()) {
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t n = c.gen().index(0, c.max_n_random());
      c.at(n, beta);
      const Series a = c.gen().unit_series(n + 1);
      const Series L = gen_lagrange_series(a, beta, n + 1);
      c.equal("u_n(a_beta) = (x/(x + n beta)) u_n(x + n beta)", u_row(L, n),
              beta_u_transform(u_row(a, n), n, beta));
    }
  }
}

void q_transform(Checker& c) {
  const std::size_t N = 8;
  for (const Rational& beta : c.betas()) {
    const Series a = steep_series(c.gen(), N);
    const Series L = gen_lagrange_series(a, beta, N);
    const Series q = reversion(log_series(a));
    const Series qL = reversion(log_series(L));
    for (std::size_t n = 0; n <= N; ++n) {
      c.at(n, beta);
      c.equal("q_n(a_beta) = (1/(1 + n beta x)) q_n(x/(1 + n beta x))", beta_q_transform(exp_column(q, n), n, beta),
              exp_column(qL, n));
    }
  }
}

void biorthogonal(Checker& c) {
  const std::size_t N = 8;
  for (std::size_t i = 0; i < c.instances(); ++i) {
    c.at(std::nullopt);
    const Series a = steep_series(c.gen(), N);
    const Series q = reversion(log_series(a));
    std::vector<Poly> u;
    std::vector<Series> cols;
    for (std::size_t n = 0; n <= N; ++n) {
      u.push_back(u_row(a, n));
      cols.push_back(exp_column(q, n));
    }
    bool ok = true;
    for (std::size_t r = 0; r <= N; ++r) {
      for (std::size_t s = 0; s <= N; ++s) {
        Rational sum;
        for (std::size_t n = 0; n <= r; ++n) sum += u[n][s] * cols[n][r];
        ok = ok && sum == Rational(r == s ? 1 : 0);
      }
    }
    c.holds("sum_n u_n(t) q_n(x) = 1/(1 - t x)", ok);
  }
}

void table_round_trip(Checker& c) {
  const std::size_t N = 8;
  for (const Rational& phi : c.betas()) {
    c.at(std::nullopt, phi);
    const Series b = c.gen().invertible_series(N);
    const Series a = c.gen().unit_series(N);
    c.guarded("inverse table recovers b a^{phi k}", [&] {
      const Series row0 = table_row(b, a, phi, 1, 0);
      const Series L = generalized_lagrange(a, phi);
      for (long k = 0; k <= 3; ++k) {
        c.equal("inverse table recovers b a^{phi k} (k = " + std::to_string(k) + ")", table_row(row0, L, phi, -1, k),
                b * pow_series(a, phi * Rational(k)));
      }
    });
  }
}

void lagrange(Checker& c) {
  pair_identities(c);
  fixed_point(c);
  coefficient_formula(c);
  u_transform(c);
  q_transform(c);
  biorthogonal(c);
  table_round_trip(c);
}

void reversion_suite(Checker& c) {
  const std::size_t N = 10;
  for (std::size_t i = 0; i < c.instances(); ++i) {
    c.at(std::nullopt);
    const Series g = c.gen().reversible_series(N);
    const Series h = reversion(g);
    c.equal("reversion by solve = reversion by Lagrange", h, reversion_lagrange(g));
    c.equal("g(h(x)) = x", compose(g, h), Series::x(N));
    c.equal("h(g(x)) = x", compose(h, g), Series::x(N));
  }
}

}  // namespace

std::vector<Suite> lagrange_suites() { return {{"lagrange", lagrange}, {"reversion", reversion_suite}}; }

}  // namespace riordan::cli::verify
