#include "riordan/combinatorics.hpp"

#include <string>

#include "riordan/error.hpp"

namespace riordan {

Rational binom(const Rational& phi, long k) {
  if (k < 0) return 0;
  Rational num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= phi - Rational(i);
    den *= i + 1;
  }
  return num / Rational(den);
}

Rational falling(const Rational& phi, long n) {
  if (n < 0) throw DomainError("falling factorial of negative length");
  Rational out = 1;
  for (long i = 0; i < n; ++i) out *= phi - Rational(i);
  return out;
}

Rational rising(const Rational& phi, long n) {
  if (n < 0) throw DomainError("rising factorial of negative length");
  Rational out = 1;
  for (long i = 0; i < n; ++i) out *= phi + Rational(i);
  return out;
}

Poly falling_poly(long n, const Rational& c) {
  if (n < 0) throw DomainError("falling factorial of negative length");
  Poly out = Poly::constant(1);
  for (long i = 0; i < n; ++i) out = out * Poly::linear(c - Rational(i));
  return out;
}

Poly rising_poly(long n, const Rational& c) {
  if (n < 0) throw DomainError("rising factorial of negative length");
  Poly out = Poly::constant(1);
  for (long i = 0; i < n; ++i) out = out * Poly::linear(c + Rational(i));
  return out;
}

Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

Rational stirling1(long n, long m) {
  if (n < 0 || m < 0 || m > n) throw DomainError("stirling1 requires 0 <= m <= n");
  return falling_poly(n)[static_cast<std::size_t>(m)];
}

Rational stirling2(long n, long m) {
  if (n < 0 || m < 0 || m > n) throw DomainError("stirling2 requires 0 <= m <= n");
  // S(n,m) = (1/m!) sum_j (-1)^{m-j} C(m,j) j^n
  Rational sum;
  for (long j = 0; j <= m; ++j) {
    Rational term = binom(m, j) * pow(Rational(j), n);
    sum += ((m - j) % 2 == 0) ? term : -term;
  }
  return sum / factorial(m);
}

Poly eulerian(long p) {
  if (p < 0) throw DomainError("eulerian polynomial of negative index");
  // A_p(x) = sum_{k<=p} x^k sum_{j<=k} (-1)^{k-j} C(p+1, k-j) j^p
  Poly out(static_cast<std::size_t>(p));
  for (long k = 0; k <= p; ++k) {
    Rational c;
    for (long j = 0; j <= k; ++j) {
      Rational term = binom(p + 1, k - j) * pow(Rational(j), p);
      c += ((k - j) % 2 == 0) ? term : -term;
    }
    out.at(static_cast<std::size_t>(k)) = c;
  }
  return out;
}

}  // namespace riordan
