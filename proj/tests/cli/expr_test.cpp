#include <doctest.h>

#include "riordan/error.hpp"
#include "riordan_cli/expr.hpp"

using riordan::DomainError;
using riordan::Rational;
using riordan::Series;
using riordan::cli::evaluate;
using riordan::cli::parse_expr;
using riordan::cli::ParseError;

namespace {

Series lit(std::initializer_list<Rational> c) { return Series(std::vector<Rational>(c)); }

}  // namespace

TEST_CASE("arithmetic follows precedence and associativity") {
  CHECK(evaluate("1 + 2*x", 2) == lit({1, 2, 0}));
  CHECK(evaluate("1 - x - x", 2) == lit({1, -2, 0}));
  CHECK(evaluate("(1 + x)*(1 - x)", 3) == lit({1, 0, -1, 0}));
  CHECK(evaluate("1/(1-x)", 3) == lit({1, 1, 1, 1}));
  CHECK(evaluate("  3/4 *x ", 1) == lit({0, Rational(3, 4)}));
}

TEST_CASE("a rational literal binds its slash greedily") {
  CHECK(evaluate("x/2/3", 1) == lit({0, Rational(3, 2)}));
  CHECK(evaluate("(x/2)/3", 1) == lit({0, Rational(1, 6)}));
}

TEST_CASE("functions") {
  CHECK(evaluate("catalan", 4) == lit({1, 1, 2, 5, 14}));
  CHECK(evaluate("catalan()", 4) == lit({1, 1, 2, 5, 14}));
  CHECK(evaluate("genbin(1/2, 1)", 3) == lit({1, 1, Rational(1, 2), Rational(1, 8)}));
  CHECK(evaluate("genbin(2, 1)", 4) == evaluate("catalan", 4));
  CHECK(evaluate("pow(1+x, 2)", 3) == lit({1, 2, 1, 0}));
  CHECK(evaluate("pow(1-x, -1)", 3) == evaluate("1/(1-x)", 3));
  CHECK(evaluate("sqrt(1+x)*sqrt(1+x)", 5) == evaluate("1+x", 5));
  CHECK(evaluate("exp(log(1+x))", 5) == evaluate("1+x", 5));
  CHECK(evaluate("exp(x)", 3) == lit({1, 1, Rational(1, 2), Rational(1, 6)}));
  CHECK(evaluate("rev(x/(1-x))", 4) == evaluate("x/(1+x)", 4));
  CHECK(evaluate("pow(1+x, -1/2)", 2) == lit({1, Rational(-1, 2), Rational(3, 8)}));
}

TEST_CASE("evaluation yields exactly the requested order") {
  CHECK(evaluate("x", 0).order() == 0);
  CHECK(evaluate("exp(x)", 7).order() == 7);
}

TEST_CASE("syntax errors report their position") {
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("1 +"), ParseError);
  CHECK_THROWS_AS(parse_expr("foo(x)"), ParseError);
  CHECK_THROWS_AS(parse_expr("(1 + x"), ParseError);
  CHECK_THROWS_AS(parse_expr("pow(x)"), ParseError);
  try {
    parse_expr("1 + * x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("undefined operations raise domain errors") {
  CHECK_THROWS_AS(evaluate("log(x)", 3), DomainError);
  CHECK_THROWS_AS(evaluate("1/x", 3), DomainError);
  CHECK_THROWS_AS(evaluate("rev(1+x)", 3), DomainError);
  CHECK_THROWS_AS(evaluate("exp(1+x)", 3), DomainError);
}
