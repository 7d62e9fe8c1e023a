#pragma once

#include <cstddef>

#include "riordan/matrix.hpp"
#include "riordan/poly.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// sum_n (phi/(phi + beta n)) C(phi + beta n, n) x^n to order N.
/// Throws PoleError when phi + beta n = 0 for some 1 <= n <= N, or phi = 0 with beta = 0.
Series gen_binomial_series(const Rational& beta, const Rational& phi, std::size_t N);

/// The series L = a(x L^beta) to order N; requires a_0 = 1.
Series gen_lagrange_series(const Series& a, const Rational& beta, std::size_t N);

struct TPoly {
  Poly poly;
  Rational phi;
  Rational beta_arg;
  std::size_t n;
};

/// t_n(phi | beta, x) = sum_m C(phi, m) C(beta, n - m) x^m.
TPoly t_poly(std::size_t n, const Rational& phi, const Rational& beta_arg);

/// (1/n) sum_m C(n(1-beta), m-1) C(n beta, n-m) x^m; n >= 1.
Poly beta_alpha_closed(std::size_t n, const Rational& beta);
/// ((n+1)!/n) sum_m C(n(2-beta), m-1) C(n beta, n-m) x^m; n >= 1.
Poly beta_phi_closed(std::size_t n, const Rational& beta);

enum class BetaKind { G, H, A, T, X };

/// G = U E^{n beta} Uinv, H = F E^{n beta} Finv, A = Ut E^{n beta} Utinv,
/// T = Ft E^{n beta} Ftinv, X = Vinv (x,x)^T V (beta ignored).
FinMatrix beta_conjugated(BetaKind kind, std::size_t n, const Rational& beta);
/// The column-by-column closed forms of the same matrices.
FinMatrix beta_closed(BetaKind kind, std::size_t n, const Rational& beta);
/// Conjugated form, checked against the closed form.
FinMatrix beta_matrix(BetaKind kind, std::size_t n, const Rational& beta);

/// (x/(x + n beta)) u(x + n beta); the division must be exact.
Poly beta_u_transform(const Poly& u, std::size_t n, const Rational& beta);
/// (1/(1 + n beta x)) q(x/(1 + n beta x)).
Series beta_q_transform(const Series& q, std::size_t n, const Rational& beta);

}  // namespace riordan
