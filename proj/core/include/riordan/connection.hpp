#pragma once

#include <cstddef>

#include "riordan/array.hpp"
#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Operator matrices on polynomials. "Order n" for the plain families means
// (n+1)x(n+1), acting on degree <= n; the tilde families are n x n.

enum class CoreKind { U, Uinv, V, Vinv, J, I };
enum class ExpKind { F, Finv, S, Sinv, C };
enum class TildeKind { Ut, Utinv, Vt, Jt, It, Ft, Ftinv, St, Ct, Dt };

///  U    x^p = (1/n!) (1-x)^{n-p} A_p(x)
///  Uinv x^p = (x)_p [x+1]_{n-p}
///  V    x^p = x^p (1+x)^{n-p},  Vinv x^p = x^p (1-x)^{n-p}
///  J    x^p = x^{n-p}
FinMatrix core_matrix(CoreKind kind, std::size_t n);

/// E^phi: c(x) -> c(x + phi) on degree <= n.
FinMatrix shift_matrix(std::size_t n, const Rational& phi);
/// (1, -x): c(x) -> c(-x) on degree <= n.
FinMatrix reflect_matrix(std::size_t n);
/// Top-left size x size window of an ordinary Riordan array.
FinMatrix riordan_matrix(const RiordanArray& r, std::size_t size);

///  F    x^p = (1-x)^{2n+1} sum_m m^p C(m+n, n) x^m
///  Finv x^p = (n!/(2n)!) (x)_p [x+n+1]_{n-p}
///  S = F Uinv, Sinv = U Finv (each also by its closed form; both must agree)
///  C    x^p = ((n+p)!/p!) x^p
FinMatrix exp_matrix(ExpKind kind, std::size_t n);

/// The S and Sinv closed forms on their own, for cross-checking.
FinMatrix s_closed(std::size_t n);
FinMatrix sinv_closed(std::size_t n);

///  Ut    x^p = (1/n!) (1-x)^{n-1-p} A_{p+1}(x)/x
///  Utinv x^p = (x-1)_p [x+1]_{n-p-1}
///  Vt = V_{n-1}, Jt = J_{n-1}, It = I_{n-1}
///  Ft: F_n with its first row and column removed
///  Ftinv x^p = (n!/(2n)!) (x-1)_p [x+n+1]_{n-p-1}
///  St = Vt^{-1} Ct Vt = Ft Utinv
///  Ct x^p = ((n+p+1)!/(p+1)!) x^p,  Dt x^p = (p+1) x^p
FinMatrix tilde_matrix(TildeKind kind, std::size_t n);

/// W_(n,m), n x n: row r is (a_{mr+m-1}, a_{mr+m-2}, ...) of
/// a = ((1-x^m)/(1-x))^{n+1}, checked against Ut diag(m^{p+1}) Utinv.
FinMatrix amazing_matrix(std::size_t n, std::size_t m);
/// Conjugation form of W_(n,m) alone.
FinMatrix amazing_conjugated(std::size_t n, std::size_t m);

/// Row r is (a_{mr+m-1}, a_{mr+m-2}, ..., a_{mr+m-cols}), zero below index 0.
/// Requires order(a) >= m*rows - 1.
FinMatrix strided_matrix(const Series& a, std::size_t m, std::size_t rows, std::size_t cols);
inline FinMatrix strided_matrix(const Series& a, std::size_t m, std::size_t rows) {
  return strided_matrix(a, m, rows, rows);
}

}  // namespace riordan
