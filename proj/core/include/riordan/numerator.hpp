#pragma once

#include <cstddef>

#include "riordan/poly.hpp"
#include "riordan/series.hpp"

namespace riordan {

struct NumeratorResult {
  Poly poly;
  /// Number of coefficients beyond the numerator verified to be zero.
  std::size_t residual_checked = 0;
};

/// g_n with sum_k [x^n] b a^k x^k = g_n(x) / (1-x)^{n+1}.
/// Requires a_0 = 1, b_0 != 0 and order >= n.
NumeratorResult euler_numerator(const Series& b, const Series& a, std::size_t n);

/// h_n with sum_k ((n+k)!/k!) [x^n] b a^k x^k = h_n(x) / (1-x)^{2n+1}.
/// Same preconditions as euler_numerator.
NumeratorResult narayana_numerator(const Series& b, const Series& a, std::size_t n);

/// Numerator of diagonal n of (1, x a).
Poly alpha_poly(const Series& a, std::size_t n);
/// Numerator of diagonal n of (1, x a)_E.
Poly phi_poly(const Series& a, std::size_t n);

/// Compares sum_n alpha_n(t) x^n with (1-t)/(1 - t a(x(1-t))) up to x^order_x t^order_t.
bool alpha_gf_check(const Series& a, std::size_t order_x, std::size_t order_t);
/// Compares sum_n phi_n(t) x^n/(n+1)! with (1-t) B(x(1-t)^2, t), B = 1/(1 - t a(x B)).
bool phi_gf_check(const Series& a, std::size_t order_x, std::size_t order_t);

}  // namespace riordan
