// Small matrices and polynomials with known entries, compared exactly.
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

FinMatrix upper_binomial(long e, std::size_t size) { return binomial_band_transpose(size - 1, e); }

void core_fixtures(Checker& c) {
  c.equal("U_1", core_matrix(CoreKind::U, 1), mat({{1, 0}, {-1, 1}}));
  c.equal("U_2", core_matrix(CoreKind::U, 2), mat({{1, 0, 0}, {-2, 1, 1}, {1, -1, 1}}, R(1, 2)));
  c.equal("U_3", core_matrix(CoreKind::U, 3),
          mat({{1, 0, 0, 0}, {-3, 1, 1, 1}, {3, -2, 0, 4}, {-1, 1, -1, 1}}, R(1, 6)));
  c.equal("U_1^-1", core_matrix(CoreKind::Uinv, 1), mat({{1, 0}, {1, 1}}));
  c.equal("U_2^-1", core_matrix(CoreKind::Uinv, 2), mat({{2, 0, 0}, {3, 1, -1}, {1, 1, 1}}));
  c.equal("U_3^-1", core_matrix(CoreKind::Uinv, 3),
          mat({{6, 0, 0, 0}, {11, 2, -1, 2}, {6, 3, 0, -3}, {1, 1, 1, 1}}));
  c.equal("J_3", core_matrix(CoreKind::J, 3), mat({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
  const FinMatrix v3 = mat({{1, 0, 0, 0}, {3, 1, 0, 0}, {3, 2, 1, 0}, {1, 1, 1, 1}});
  const FinMatrix v3inv = mat({{1, 0, 0, 0}, {-3, 1, 0, 0}, {3, -2, 1, 0}, {-1, 1, -1, 1}});
  c.equal("V_3", core_matrix(CoreKind::V, 3), v3);
  c.equal("V_3^-1", core_matrix(CoreKind::Vinv, 3), v3inv);
  c.equal("U_3^-1 V_3^-1", core_matrix(CoreKind::Uinv, 3) * core_matrix(CoreKind::Vinv, 3),
          mat({{1, 0, 0, 0}, {0, 1, -1, 2}, {0, 0, 1, -3}, {0, 0, 0, 1}}, 6) * diag({1, 1, R(1, 2), R(1, 6)}));
  c.equal("V_3 U_3", core_matrix(CoreKind::V, 3) * core_matrix(CoreKind::U, 3),
          diag({1, 1, 2, 6}, R(1, 6)) * mat({{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 0, 1, 3}, {0, 0, 0, 1}}));

  const Poly euler[] = {Poly{1}, Poly{0, 1}, Poly{0, 1, 1}, Poly{0, 1, 4, 1}, Poly{0, 1, 11, 11, 1}};
  const Series e = exp_series(xs(8));
  for (long p = 0; p <= 4; ++p) {
    c.equal("A_" + std::to_string(p), eulerian(p), euler[p]);
    c.equal("A_" + std::to_string(p) + " from the numerator of (1, x e^x)",
            alpha_poly(e, static_cast<std::size_t>(p)) * factorial(p), euler[p]);
  }
}

void exponential_fixtures(Checker& c) {
  c.equal("F_1", exp_matrix(ExpKind::F, 1), mat({{1, 0}, {-1, 2}}));
  c.equal("F_2", exp_matrix(ExpKind::F, 2), mat({{1, 0, 0}, {-2, 3, 3}, {1, -3, 9}}));
  c.equal("F_3", exp_matrix(ExpKind::F, 3),
          mat({{1, 0, 0, 0}, {-3, 4, 4, 4}, {3, -8, 12, 52}, {-1, 4, -16, 64}}));
  c.equal("F_1^-1", exp_matrix(ExpKind::Finv, 1), mat({{2, 0}, {1, 1}}, R(1, 2)));
  c.equal("F_2^-1", exp_matrix(ExpKind::Finv, 2), mat({{12, 0, 0}, {7, 3, -1}, {1, 1, 1}}, R(2, 24)));
  c.equal("F_3^-1", exp_matrix(ExpKind::Finv, 3),
          mat({{120, 0, 0, 0}, {74, 20, -4, 2}, {15, 9, 3, -3}, {1, 1, 1, 1}}, R(6, 720)));

  c.equal("S_1", exp_matrix(ExpKind::S, 1), mat({{1, 0}, {1, 2}}));
  c.equal("S_2", exp_matrix(ExpKind::S, 2), mat({{1, 0, 0}, {4, 3, 0}, {1, 3, 6}}, 2));
  c.equal("S_3", exp_matrix(ExpKind::S, 3),
          mat({{1, 0, 0, 0}, {9, 4, 0, 0}, {9, 12, 10, 0}, {1, 4, 10, 20}}, 6));
  c.equal("S_4", exp_matrix(ExpKind::S, 4),
          mat({{1, 0, 0, 0, 0}, {16, 5, 0, 0, 0}, {36, 30, 15, 0, 0}, {16, 30, 40, 35, 0}, {1, 5, 15, 35, 70}},
              24));
  c.equal("S_1^-1", exp_matrix(ExpKind::Sinv, 1), mat({{2, 0}, {-1, 1}}, R(1, 2)));
  c.equal("S_2^-1", exp_matrix(ExpKind::Sinv, 2), mat({{6, 0, 0}, {-8, 2, 0}, {3, -1, 1}}, R(2, 24)));
  c.equal("S_3^-1", exp_matrix(ExpKind::Sinv, 3),
          mat({{20, 0, 0, 0}, {-45, 5, 0, 0}, {36, -6, 2, 0}, {-10, 2, -1, 1}}, R(6, 720)));
  c.equal("S_4^-1", exp_matrix(ExpKind::Sinv, 4),
          mat({{70, 0, 0, 0, 0},
               {-224, 14, 0, 0, 0},
               {280, -28, R(14, 3), 0, 0},
               {-160, 20, R(-16, 3), 2, 0},
               {35, -5, R(5, 3), -1, 1}},
              R(24, 40320)));
  c.equal("S_3 = 3! V_3^-1 diag V_3", exp_matrix(ExpKind::S, 3),
          core_matrix(CoreKind::Vinv, 3) * diag({1, 4, 10, 20}, 6) * core_matrix(CoreKind::V, 3));
}

void g_fixtures(Checker& c) {
  c.equal("G_1", beta_matrix(BetaKind::G, 1, 1), mat({{2, 1}, {-1, 0}}));
  c.equal("G_2", beta_matrix(BetaKind::G, 2, 1), mat({{6, 3, 1}, {-8, -3, 0}, {3, 1, 0}}));
  const FinMatrix g3 = mat({{20, 10, 4, 1}, {-45, -20, -6, 0}, {36, 15, 4, 0}, {-10, -4, -1, 0}});
  c.equal("G_3", beta_matrix(BetaKind::G, 3, 1), g3);
  c.equal("G_1^-1", beta_matrix(BetaKind::G, 1, -1), mat({{0, -1}, {1, 2}}));
  c.equal("G_2^-1", beta_matrix(BetaKind::G, 2, -1), mat({{0, 1, 3}, {0, -3, -8}, {1, 3, 6}}));
  const FinMatrix g3inv = mat({{0, -1, -4, -10}, {0, 4, 15, 36}, {0, -6, -20, -45}, {1, 4, 10, 20}});
  c.equal("G_3^-1", beta_matrix(BetaKind::G, 3, -1), g3inv);
  c.equal("G_3^-1 is the matrix inverse", g3.inverse(), g3inv);
  c.equal("G_3 factorization", core_matrix(CoreKind::Vinv, 3) * upper_binomial(3, 4) * core_matrix(CoreKind::V, 3), g3);

  const FinMatrix x3 = mat({{3, 1, 0, 0}, {-6, -1, 1, 0}, {4, 0, -1, 1}, {-1, 0, 0, -1}});
  c.equal("X_3", beta_matrix(BetaKind::X, 3, 0), x3);
  c.equal("X_3^2", x3.pow(2), mat({{3, 2, 1, 0}, {-8, -5, -2, 1}, {7, 4, 1, -2}, {-2, -1, 0, 1}}));
  c.equal("X_3^3", x3.pow(3), mat({{1, 1, 1, 1}, {-3, -3, -3, -3}, {3, 3, 3, 3}, {-1, -1, -1, -1}}));
  const FinMatrix id = FinMatrix::identity(4);
  c.equal("G_3 = I + 3X + 3X^2 + X^3", id + R(3) * x3 + R(3) * x3.pow(2) + x3.pow(3), g3);
  c.equal("G_3^-1 = I - 3X + 6X^2 - 10X^3", id - R(3) * x3 + R(6) * x3.pow(2) - R(10) * x3.pow(3), g3inv);

  c.equal("G_2^(1/2)", beta_matrix(BetaKind::G, 2, R(1, 2)), mat({{3, 1, 0}, {-3, 0, 1}, {1, 0, 0}}));
  c.equal("G_3^(1/3)", beta_matrix(BetaKind::G, 3, R(1, 3)),
          mat({{4, 1, 0, 0}, {-6, 0, 1, 0}, {4, 0, 0, 1}, {-1, 0, 0, 0}}));
  c.equal("G_4^(1/4)", beta_matrix(BetaKind::G, 4, R(1, 4)),
          mat({{5, 1, 0, 0, 0}, {-10, 0, 1, 0, 0}, {10, 0, 0, 1, 0}, {-5, 0, 0, 0, 1}, {1, 0, 0, 0, 0}}));
}

void h_fixtures(Checker& c) {
  c.equal("H_1", beta_matrix(BetaKind::H, 1, 1), mat({{3, 1}, {-1, 1}}, R(1, 2)));
  c.equal("H_2", beta_matrix(BetaKind::H, 2, 1), mat({{15, 5, 1}, {-12, 2, 4}, {3, -1, 1}}, R(1, 6)));
  const FinMatrix h3 = mat({{84, 28, 7, 1}, {-108, -4, 15, 9}, {54, -6, -1, 9}, {-10, 2, -1, 1}}, R(1, 20));
  c.equal("H_3", beta_matrix(BetaKind::H, 3, 1), h3);
  c.equal("H_3 factorization",
          core_matrix(CoreKind::Vinv, 3) * diag({1, 4, 10, 20}) * upper_binomial(3, 4) *
              diag({1, R(1, 4), R(1, 10), R(1, 20)}) * core_matrix(CoreKind::V, 3),
          h3);
}

void tilde_fixtures(Checker& c) {
  c.equal("Ut_4", tilde_matrix(TildeKind::Ut, 4),
          mat({{1, 1, 1, 1}, {-3, -1, 3, 11}, {3, -1, -3, 11}, {-1, 1, -1, 1}}, R(1, 24)));
  c.equal("Ut_4^-1", tilde_matrix(TildeKind::Utinv, 4),
          mat({{6, -2, 2, -6}, {11, -1, -1, 11}, {6, 2, -2, -6}, {1, 1, 1, 1}}));
  c.equal("Ft_4", tilde_matrix(TildeKind::Ft, 4),
          mat({{1, 1, 1, 1}, {-3, 3, 15, 39}, {3, -9, 9, 171}, {-1, 5, -25, 125}}, 5));
  c.equal("Ft_4^-1", tilde_matrix(TildeKind::Ftinv, 4),
          mat({{210, -30, 10, -6}, {107, 19, -13, 11}, {18, 10, 2, -6}, {1, 1, 1, 1}}, R(24, 40320)));
  c.equal("Ut_4^-1 Vt_4^-1", tilde_matrix(TildeKind::Utinv, 4) * tilde_matrix(TildeKind::Vt, 4).inverse(),
          mat({{1, -1, 2, -6}, {0, 1, -3, 11}, {0, 0, 1, -6}, {0, 0, 0, 1}}, 24) *
              diag({1, R(1, 2), R(1, 6), R(1, 24)}));
  c.equal("Vt_4 Ut_4", tilde_matrix(TildeKind::Vt, 4) * tilde_matrix(TildeKind::Ut, 4),
          diag({1, 2, 6, 24}, R(1, 24)) * mat({{1, 1, 1, 1}, {0, 1, 3, 7}, {0, 0, 1, 6}, {0, 0, 0, 1}}));
}

void w_fixtures(Checker& c) {
  struct W {
    std::size_t n, m;
    FinMatrix expected;
  };
  const W table[] = {
      {1, 2, mat({{2}})},
      {1, 3, mat({{3}})},
      {1, 4, mat({{4}})},
      {2, 2, mat({{3, 1}, {1, 3}})},
      {3, 2, mat({{4, 1, 0}, {4, 6, 4}, {0, 1, 4}})},
      {4, 2, mat({{5, 1, 0, 0}, {10, 10, 5, 1}, {1, 5, 10, 10}, {0, 0, 1, 5}})},
      {2, 3, mat({{6, 3}, {3, 6}})},
      {3, 3, mat({{10, 4, 1}, {16, 19, 16}, {1, 4, 10}})},
      {4, 3, mat({{15, 5, 1, 0}, {51, 45, 30, 15}, {15, 30, 45, 51}, {0, 1, 5, 15}})},
      {2, 4, mat({{10, 6}, {6, 10}})},
      {3, 4, mat({{20, 10, 4}, {40, 44, 40}, {4, 10, 20}})},
      {4, 4, mat({{35, 15, 5, 1}, {155, 135, 101, 65}, {65, 101, 135, 155}, {1, 5, 15, 35}})},
  };
  for (const auto& w : table) {
    c.equal("W_(" + std::to_string(w.n) + "," + std::to_string(w.m) + ")", amazing_matrix(w.n, w.m), w.expected);
  }
  const FinMatrix w32 = amazing_matrix(3, 2);
  const FinMatrix w33 = amazing_matrix(3, 3);
  const FinMatrix v141 = mat({{1}, {4}, {1}});
  c.equal("W_(3,2) (1,4,1)", w32 * v141, R(8) * v141);
  c.equal("W_(3,3) (1,4,1)", w33 * v141, R(27) * v141);
  c.equal("W_(3,2)^2 = W_(3,4)", w32 * w32, amazing_matrix(3, 4));
  c.equal("W_(3,2) reduction by (1-x)",
          mat({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}) * w32 * mat({{1, 0}, {-1, 1}, {0, -1}}),
          mat({{3, 1}, {1, 3}, {0, 0}}));
  c.equal("W_(3,2) reduction by (1-x)^2", mat({{1, 0, 0}, {2, 1, 0}, {3, 2, 1}}) * w32 * mat({{1}, {-2}, {1}}),
          mat({{2}, {0}, {0}}));
  c.equal("W_(2,2) reduction by (1-x)", mat({{1, 0}, {1, 1}}) * amazing_matrix(2, 2) * mat({{1}, {-1}}),
          mat({{2}, {0}}));
  c.equal("W_(3,2) eigen-factorization",
          mat({{1, 1, 1}, {-2, 0, 4}, {1, -1, 1}}, R(1, 6)) * diag({2, 4, 8}) *
              mat({{2, -1, 2}, {3, 0, -3}, {1, 1, 1}}),
          w32);
  c.equal("W_(3,2) triangular factorization",
          mat({{1, 0, 0}, {-2, 1, 0}, {1, -1, 1}}) * mat({{2, 1, 0}, {0, 4, 4}, {0, 0, 8}}) *
              mat({{1, 0, 0}, {2, 1, 0}, {1, 1, 1}}),
          w32);
}

void at_fixtures(Checker& c) {
  c.equal("A_2", beta_matrix(BetaKind::A, 2, 1), mat({{2, 1}, {-1, 0}}));
  c.equal("A_3", beta_matrix(BetaKind::A, 3, 1), mat({{5, R(5, 2), 1}, {-6, -2, 0}, {2, R(1, 2), 0}}));
  const FinMatrix a4 = mat({{14, 7, 3, 1},
                            {-28, R(-35, 3), R(-10, 3), 0},
                            {20, R(22, 3), R(5, 3), 0},
                            {-5, R(-5, 3), R(-1, 3), 0}});
  c.equal("A_4", beta_matrix(BetaKind::A, 4, 1), a4);
  const FinMatrix vt = tilde_matrix(TildeKind::Vt, 4);
  c.equal("A_4 factorization",
          vt.inverse() * diag({1, 2, 3, 4}) * upper_binomial(4, 4) * diag({1, R(1, 2), R(1, 3), R(1, 4)}) * vt, a4);

  c.equal("T_2", beta_matrix(BetaKind::T, 2, 1), mat({{3, 1}, {-1, 1}}, R(1, 2)));
  c.equal("T_3", beta_matrix(BetaKind::T, 3, 1), mat({{12, 4, 1}, {-9, 2, 3}, {2, -1, 1}}, R(1, 5)));
  const FinMatrix t4 =
      mat({{55, R(55, 3), 5, 1}, {-66, 0, 10, 6}, {30, -6, 0, 6}, {-5, R(5, 3), -1, 1}}, R(1, 14));
  c.equal("T_4", beta_matrix(BetaKind::T, 4, 1), t4);
  c.equal("T_4 factorization",
          vt.inverse() * diag({1, 6, 21, 56}) * upper_binomial(4, 4) * diag({1, R(1, 6), R(1, 21), R(1, 56)}) * vt,
          t4);
}

FinMatrix triangle(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> out;
  const std::size_t n = rows.size();
  for (const auto& row : rows) {
    out.emplace_back(row.begin(), row.end());
    out.back().resize(n);
  }
  return FinMatrix(out);
}

void triangle_fixtures(Checker& c) {
  const std::size_t N = 8;
  const Series x = xs(N);
  const Series cat = gen_binomial_series(2, 1, N);
  const Series xc = x * cat;
  const FinMatrix first = riordan_matrix(RiordanArray(one_plus_x(N), x * one_plus_x(N)), 6);
  c.equal("(1 + x, x(1 + x)) triangle", first,
          triangle({{1}, {1, 1}, {0, 2, 1}, {0, 1, 3, 1}, {0, 0, 3, 4, 1}, {0, 0, 1, 6, 5, 1}}));
  const FinMatrix second = riordan_matrix(RiordanArray(log_derivative_factor(cat), xc.truncated(N - 1)), 6);
  c.equal("(1 + x (log C)', x C) triangle", second,
          triangle({{1}, {1, 1}, {3, 2, 1}, {10, 6, 3, 1}, {35, 20, 10, 4, 1}, {126, 70, 35, 15, 5, 1}}));
  const Series xc_full = (xs(N + 1) * gen_binomial_series(2, 1, N + 1));
  const FinMatrix third = riordan_matrix(RiordanArray(xc_full.derivative(), xc), 6);
  c.equal("((x C)', x C) triangle", third,
          triangle({{1}, {2, 1}, {6, 3, 1}, {20, 10, 4, 1}, {70, 35, 15, 5, 1}, {252, 126, 56, 21, 6, 1}}));
  const Series x_over_c = x * pow_series(cat, -1);
  const FinMatrix fourth = riordan_matrix(RiordanArray(log_derivative_factor(cat), x_over_c.truncated(N - 1)), 6);
  c.equal("(1 + x (log C)', x / C) triangle", fourth,
          triangle({{1}, {1, 1}, {3, 0, 1}, {10, 1, -1, 1}, {35, 4, 0, -2, 1}, {126, 15, 1, 0, -3, 1}}));
}

void run_fixtures(Checker& c) {
  core_fixtures(c);
  exponential_fixtures(c);
  g_fixtures(c);
  h_fixtures(c);
  tilde_fixtures(c);
  w_fixtures(c);
  at_fixtures(c);
  triangle_fixtures(c);
}

}  // namespace

std::vector<Suite> fixture_suites() { return {{"fixtures", run_fixtures}}; }

}  // namespace riordan::cli::verify
