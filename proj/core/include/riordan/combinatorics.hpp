#pragma once

#include "riordan/poly.hpp"
#include "riordan/rational.hpp"

namespace riordan {

/// Generalized binomial coefficient phi(phi-1)...(phi-k+1)/k!; zero for k < 0.
Rational binom(const Rational& phi, long k);

/// Descending factorial (phi)_n = phi(phi-1)...(phi-n+1).
Rational falling(const Rational& phi, long n);
/// Ascending factorial [phi]_n = phi(phi+1)...(phi+n-1).
Rational rising(const Rational& phi, long n);

/// (x + c)_n expanded, bound n.
Poly falling_poly(long n, const Rational& c = 0);
/// [x + c]_n expanded, bound n.
Poly rising_poly(long n, const Rational& c = 0);

Rational factorial(long n);

/// Signed Stirling numbers of the first kind: (x)_n = sum s(n,m) x^m.
Rational stirling1(long n, long m);
/// Stirling numbers of the second kind: x^n = sum S(n,m) (x)_m.
Rational stirling2(long n, long m);

/// Eulerian polynomial A_p(x) = (1-x)^{p+1} sum_m m^p x^m, with A_0 = 1.
Poly eulerian(long p);

}  // namespace riordan
