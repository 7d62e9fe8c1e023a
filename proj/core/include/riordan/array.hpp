#pragma once

#include <cstddef>
#include <vector>

#include "riordan/poly.hpp"
#include "riordan/series.hpp"

namespace riordan {

enum class Flavor { Ordinary, Exponential, Square };
enum class SliceKind { Row, Column, Diagonal };

struct TriangleSlice {
  std::vector<Rational> entries;
  SliceKind kind;
  std::size_t index;
};

/// A Riordan array stored as its generating pair and windowed on demand.
///  Ordinary    (f, g): column m has generating function f g^m, g_0 = 0.
///  Exponential (f, g)_E: entry (n, m) is (n!/m!) [x^n] f g^m, g_0 = 0.
///  Square      (b, a): column m has generating function b a^m, a_0 = 1, b_0 != 0.
class RiordanArray {
 public:
  RiordanArray(Series f, Series g, Flavor flavor = Flavor::Ordinary);

  static RiordanArray identity(std::size_t order, Flavor flavor = Flavor::Ordinary);
  /// (1/(1 - phi x), x/(1 - phi x)).
  static RiordanArray pascal(const Rational& phi, std::size_t order);

  const Series& f() const { return f_; }
  const Series& g() const { return g_; }
  Flavor flavor() const { return flavor_; }
  std::size_t order() const;
  bool is_proper() const;

  Rational entry(std::size_t n, std::size_t m) const;

  /// Row n has n+1 entries (order+1 for a square array); a column or
  /// diagonal runs to the array order.
  TriangleSlice materialize(SliceKind kind, std::size_t n) const;

  /// Rows 0..rows-1, columns 0..rows-1.
  std::vector<std::vector<Rational>> window(std::size_t rows) const;

 private:
  Series f_;
  Series g_;
  Flavor flavor_;
};

/// (f, g)(b, a) = (f b(g), a(g)); both arrays must share a triangular flavor.
RiordanArray riordan_mul(const RiordanArray& lhs, const RiordanArray& rhs);
/// (1/f(h), h) with h the reversion of g; requires a proper array.
RiordanArray riordan_inverse(const RiordanArray& r);

/// Row n of an exponential array read as a polynomial: sum s_n(phi) x^n/n! = f exp(phi g).
Poly sheffer_row(const RiordanArray& r, std::size_t n);

/// b with (1, x/a)^{-1} = (1, x b); requires a_0 = 1.
Series lagrange_pair(const Series& a);

/// The series L with L = a(x L^beta); requires a_0 = 1. beta = 0 returns a.
Series generalized_lagrange(const Series& a, const Rational& beta);

/// Row k of the table {b, a^phi}_v:
///   b(x L^{v phi}) (1 + x (log L^{v phi})') L^{phi k}, L the generalized
///   Lagrange series of a with parameter v phi. Result has the order of a and b.
Series table_row(const Series& b, const Series& a, const Rational& phi, long v, long k);

}  // namespace riordan
