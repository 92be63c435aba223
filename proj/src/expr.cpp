#include "fvinv/expr.hpp"

#include <cctype>
#include <limits>

#include "fvinv/errors.hpp"

namespace fvinv {

namespace {

ExprPtr make(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = sum();
    skip_space();
    if (pos_ < text_.size())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      lhs = make(expr::Binary{c, lhs, product()});
    }
    return lhs;
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++pos_;
      lhs = make(expr::Binary{c, lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (accept('-')) return make(expr::Negate{unary()});
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (at >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[at])))
      throw ParseError("exponent must be a nonnegative integer", at);
    const Integer n = integer();
    if (n > std::numeric_limits<unsigned>::max()) throw ParseError("exponent too large", at);
    if (peek() == '^') throw ParseError("chained exponent; use parentheses", pos_);
    return make(expr::Power{base, n.convert_to<unsigned>()});
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return make(expr::Literal{Coefficient(integer())});
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name != "x") throw ParseError("unknown identifier '" + std::string(name) + "'", start);
      return make(expr::Variable{});
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = sum();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return make(expr::Group{inner});
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Evaluator {
  std::size_t n;

  Series operator()(const expr::Literal& l) const { return Series::constant(l.value, n); }
  Series operator()(const expr::Variable&) const { return Series::x(n); }
  Series operator()(const expr::Negate& e) const { return -eval(*e.operand, n); }
  Series operator()(const expr::Group& g) const { return eval(*g.inner, n); }
  Series operator()(const expr::Power& p) const { return pow(eval(*p.base, n), p.exponent); }
  Series operator()(const expr::Binary& b) const {
    const Series lhs = eval(*b.lhs, n);
    const Series rhs = eval(*b.rhs, n);
    switch (b.op) {
      case '+': return lhs + rhs;
      case '-': return lhs - rhs;
      case '*': return lhs * rhs;
      default:
        if (rhs[0] == 0) throw EvalError("division by a series with zero constant term");
        return lhs * rhs.invert();
    }
  }
};

} // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

Series eval(const Expr& e, std::size_t precision) {
  if (precision == 0) throw EvalError("precision must be at least 1");
  return std::visit(Evaluator{precision}, e.node);
}

Series eval(std::string_view text, std::size_t precision) { return eval(*parse(text), precision); }

std::string to_string(const Expr& e) {
  struct Printer {
    std::string operator()(const expr::Literal& l) const { return l.value.str(); }
    std::string operator()(const expr::Variable&) const { return "x"; }
    std::string operator()(const expr::Negate& n) const { return "(-" + to_string(*n.operand) + ")"; }
    std::string operator()(const expr::Group& g) const { return "(" + to_string(*g.inner) + ")"; }
    std::string operator()(const expr::Power& p) const {
      return "(" + to_string(*p.base) + ")^" + std::to_string(p.exponent);
    }
    std::string operator()(const expr::Binary& b) const {
      return "(" + to_string(*b.lhs) + " " + b.op + " " + to_string(*b.rhs) + ")";
    }
  };
  return std::visit(Printer{}, e.node);
}

} // namespace fvinv
