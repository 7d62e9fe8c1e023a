#pragma once

#include <cstddef>
#include <initializer_list>

#include "riordan/array.hpp"
#include "riordan/matrix.hpp"
#include "riordan/poly.hpp"
#include "riordan/series.hpp"

namespace riordan::cli::verify {

using R = Rational;

/// Row-major literal with an overall scale.
FinMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows, const Rational& scale = 1);
FinMatrix diag(std::initializer_list<Rational> d, const Rational& scale = 1);

Series one(std::size_t order);
Series xs(std::size_t order);

/// The window of (f, x): entry (r, c) = f_{r-c}.
FinMatrix toeplitz(const Series& f, std::size_t rows, std::size_t cols);
/// ((1 + x)^e, x)^T on degree <= n; e must be a non-negative integer.
FinMatrix binomial_band_transpose(std::size_t n, long e);
/// The rows x cols identity embedding.
FinMatrix inclusion(std::size_t rows, std::size_t cols);

/// c(x) -> c(x)/x; requires c(0) = 0, bound drops by one.
Poly drop_x(const Poly& c);
/// x^bound c(1/x) with the given bound.
Poly reversal(const Poly& c, std::size_t bound);

/// 1 + x (log p)'; requires p_0 = 1.
Series log_derivative_factor(const Series& p);

/// Row n of (1, log a)_E as a polynomial.
Poly u_row(const Series& a, std::size_t n);

/// The generalized binomial series of parameter beta. Where the closed
/// coefficient formula has a pole the generalized Lagrange series of 1 + x is
/// used instead; the two agree wherever both are defined.
Series binomial_family(const Rational& beta, std::size_t order);

/// (1 + x) with the given order.
Series one_plus_x(std::size_t order);

/// The exponential Riordan array numerator of diagonal n, bound n.
Poly exp_numerator(const Series& b, const Series& a, std::size_t n);
/// The ordinary Riordan array numerator of diagonal n, bound n.
Poly ord_numerator(const Series& b, const Series& a, std::size_t n);

/// Row n of a triangular array as a polynomial of bound n.
Poly array_row(const RiordanArray& r, std::size_t n);

/// sum_{m=0}^{last} C(u, m) C(v, top - m) x^m.
Poly binom_sum(const Rational& u, const Rational& v, std::size_t top, std::size_t last);

/// (1 - x)^m.
Poly one_minus_x(std::size_t m);

/// 1 + x (log L^e)'.
Series power_log_factor(const Series& L, const Rational& e);

/// True when nb is a non-negative integer.
bool is_natural(const Rational& nb);

}  // namespace riordan::cli::verify
