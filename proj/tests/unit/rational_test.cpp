#include <doctest.h>

#include <sstream>

#include "riordan/error.hpp"
#include "riordan/rational.hpp"

using riordan::Rational;

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(8, 4).is_integer());
}

TEST_CASE("zero denominators are rejected") {
  CHECK_THROWS_AS(Rational(1, 0), riordan::DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), riordan::DomainError);
  CHECK_THROWS_AS(Rational(0).inverse(), riordan::DomainError);
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("+3/9") == Rational(1, 3));
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1//2", "--1", "1 /2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), riordan::DomainError);
  }
}

TEST_CASE("field arithmetic") {
  const Rational a(1, 3), b(-5, 6);
  CHECK(a + b == Rational(-1, 2));
  CHECK(a - b == Rational(7, 6));
  CHECK(a * b == Rational(-5, 18));
  CHECK(a / b == Rational(-2, 5));
  CHECK(-a == Rational(-1, 3));
  CHECK(b.abs() == Rational(5, 6));
  CHECK(a.inverse() == Rational(3));
  CHECK(b < a);
  CHECK(b.sign() == -1);
}

TEST_CASE("integer powers, including negative exponents") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(-1), 7) == Rational(-1));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(pow(Rational(0), -1), riordan::DomainError);
}

TEST_CASE("to_long only for integers") {
  CHECK(Rational(-12).to_long() == -12);
  CHECK_THROWS_AS(Rational(1, 2).to_long(), riordan::DomainError);
}

TEST_CASE("stream output matches str") {
  std::ostringstream os;
  os << Rational(-7, 3);
  CHECK(os.str() == "-7/3");
}
