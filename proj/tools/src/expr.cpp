#include "riordan_cli/expr.hpp"

#include <cctype>

#include "riordan/error.hpp"
#include "riordan/genlagrange.hpp"

namespace riordan::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  std::string digits() {
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) out += src_[pos_++];
    return out;
  }

  // INT ('/' INT)?; the slash binds to the literal only when an integer follows.
  Rational rational() {
    skip_space();
    const std::size_t start = pos_;
    if (!peek_digit()) fail("expected a number");
    std::string num = digits();
    const std::size_t save = pos_;
    if (accept('/') && peek_digit()) {
      std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos) {
        pos_ = start;
        fail("zero denominator");
      }
      return Rational::parse(num + "/" + den);
    }
    pos_ = save;
    return Rational::parse(num);
  }

  Rational signed_rational() {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Rational r = rational();
    return negative ? -r : r;
  }

  std::string identifier() {
    std::string out;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) out += src_[pos_++];
    return out;
  }

  Expr node(Expr::Op op, std::size_t at) {
    Expr e;
    e.op = op;
    e.position = at;
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      Expr::Op op;
      if (accept('+')) {
        op = Expr::Op::Add;
      } else if (accept('-')) {
        op = Expr::Op::Sub;
      } else {
        return lhs;
      }
      Expr e = node(op, at);
      e.args.push_back(std::move(lhs));
      e.args.push_back(term());
      lhs = std::move(e);
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      Expr::Op op;
      if (accept('*')) {
        op = Expr::Op::Mul;
      } else if (accept('/')) {
        op = Expr::Op::Div;
      } else {
        return lhs;
      }
      Expr e = node(op, at);
      e.args.push_back(std::move(lhs));
      e.args.push_back(factor());
      lhs = std::move(e);
    }
  }

  Expr factor() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) fail("unexpected end of input");
    if (peek_digit()) {
      Expr e = node(Expr::Op::Constant, at);
      e.value = rational();
      return e;
    }
    if (accept('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(src_[pos_]))) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    const std::string name = identifier();
    if (name == "x") return node(Expr::Op::X, at);
    if (name == "catalan") {
      if (accept('(')) expect(')');
      return node(Expr::Op::Catalan, at);
    }
    Expr e;
    if (name == "pow") {
      e = node(Expr::Op::Pow, at);
    } else if (name == "log") {
      e = node(Expr::Op::Log, at);
    } else if (name == "exp") {
      e = node(Expr::Op::Exp, at);
    } else if (name == "sqrt") {
      e = node(Expr::Op::Sqrt, at);
    } else if (name == "rev") {
      e = node(Expr::Op::Rev, at);
    } else if (name == "genbin") {
      e = node(Expr::Op::GenBin, at);
    } else {
      pos_ = at;
      fail("unknown function '" + name + "'");
    }
    expect('(');
    if (e.op == Expr::Op::GenBin) {
      e.value = signed_rational();
      expect(',');
      e.value2 = signed_rational();
    } else {
      e.args.push_back(expr());
      if (e.op == Expr::Op::Pow) {
        expect(',');
        e.value = signed_rational();
      }
    }
    expect(')');
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::size_t valuation(const Series& s) {
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (!s[k].is_zero()) return k;
  }
  return s.order() + 1;
}

const char* op_name(Expr::Op op) {
  switch (op) {
    case Expr::Op::Div: return "division";
    case Expr::Op::Pow: return "pow";
    case Expr::Op::Log: return "log";
    case Expr::Op::Exp: return "exp";
    case Expr::Op::Sqrt: return "sqrt";
    case Expr::Op::Rev: return "rev";
    case Expr::Op::GenBin: return "genbin";
    default: return "expression";
  }
}

Series divide(const Expr& e, std::size_t order) {
  Series den = evaluate(e.args[1], order);
  const std::size_t v = valuation(den);
  if (v == 0) return evaluate(e.args[0], order) / den;
  if (v > order) throw DomainError("division by a series that vanishes to order " + std::to_string(order));
  Series num = evaluate(e.args[0], order + v);
  den = evaluate(e.args[1], order + v);
  for (std::size_t k = 0; k < v; ++k) {
    if (!num[k].is_zero()) {
      throw DomainError("quotient is not a power series: numerator coefficient " + std::to_string(k) +
                        " is nonzero while the denominator vanishes to order " + std::to_string(v));
    }
  }
  std::vector<Rational> nc(num.coeffs().begin() + static_cast<long>(v), num.coeffs().end());
  std::vector<Rational> dc(den.coeffs().begin() + static_cast<long>(v), den.coeffs().end());
  return Series(std::move(nc)) / Series(std::move(dc));
}

Series evaluate_node(const Expr& e, std::size_t order) {
  switch (e.op) {
    case Expr::Op::Constant: return Series::constant(e.value, order);
    case Expr::Op::X: return Series::x(order);
    case Expr::Op::Add: return evaluate(e.args[0], order) + evaluate(e.args[1], order);
    case Expr::Op::Sub: return evaluate(e.args[0], order) - evaluate(e.args[1], order);
    case Expr::Op::Mul: return evaluate(e.args[0], order) * evaluate(e.args[1], order);
    case Expr::Op::Div: return divide(e, order);
    case Expr::Op::Pow: return pow_series(evaluate(e.args[0], order), e.value);
    case Expr::Op::Log: return log_series(evaluate(e.args[0], order));
    case Expr::Op::Exp: return exp_series(evaluate(e.args[0], order));
    case Expr::Op::Sqrt: return pow_series(evaluate(e.args[0], order), Rational(1, 2));
    case Expr::Op::Rev: return reversion(evaluate(e.args[0], order));
    case Expr::Op::GenBin: return gen_binomial_series(e.value, e.value2, order);
    case Expr::Op::Catalan: return gen_binomial_series(2, 1, order);
  }
  throw DomainError("unknown expression node");
}

}  // namespace

Expr parse_expr(std::string_view source) { return Parser(source).parse(); }

Series evaluate(const Expr& expr, std::size_t order) {
  Series s;
  try {
    s = evaluate_node(expr, order);
  } catch (const PoleError&) {
    throw;
  } catch (const DomainError& err) {
    const std::string what = err.what();
    if (what.find(" at position ") != std::string::npos) throw;
    throw DomainError(what + " (" + op_name(expr.op) + " at position " + std::to_string(expr.position) + ")");
  }
  return s.order() > order ? s.truncated(order) : s;
}

}  // namespace riordan::cli
