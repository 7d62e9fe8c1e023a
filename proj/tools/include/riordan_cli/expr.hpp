#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan::cli {

/// Syntax error at a 0-based character offset into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Series expression tree.
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := RAT | 'x' | '(' expr ')' | FUNC '(' args ')'
///   RAT    := INT ('/' INT)?
/// FUNC is one of pow(e, r), log(e), exp(e), sqrt(e), rev(e), genbin(beta, phi)
/// and catalan (the parentheses are optional for catalan). Rational argument
/// slots accept a leading sign.
struct Expr {
  enum class Op { Constant, X, Add, Sub, Mul, Div, Pow, Log, Exp, Sqrt, Rev, GenBin, Catalan };
  Op op = Op::Constant;
  Rational value;   // constant, pow exponent, genbin beta
  Rational value2;  // genbin phi
  std::vector<Expr> args;
  std::size_t position = 0;
};

Expr parse_expr(std::string_view source);

/// Evaluates to a series of exactly the requested order. Throws DomainError
/// (or a subclass) when an operation is undefined for its operand.
Series evaluate(const Expr& expr, std::size_t order);

inline Series evaluate(std::string_view source, std::size_t order) { return evaluate(parse_expr(source), order); }

}  // namespace riordan::cli
