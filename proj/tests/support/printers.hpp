#pragma once

#include <doctest.h>

#include "riordan/matrix.hpp"
#include "riordan/poly.hpp"
#include "riordan/series.hpp"

namespace doctest {

template <>
struct StringMaker<riordan::Poly> {
  static String convert(const riordan::Poly& p) { return p.str().c_str(); }
};

template <>
struct StringMaker<riordan::Series> {
  static String convert(const riordan::Series& s) { return ("[" + s.str() + "]").c_str(); }
};

template <>
struct StringMaker<riordan::FinMatrix> {
  static String convert(const riordan::FinMatrix& m) { return ("\n" + m.str()).c_str(); }
};

}  // namespace doctest
