#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "fvinv/rational.hpp"
#include "fvinv/series.hpp"

namespace fvinv {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace expr {

struct Literal {
  Coefficient value;
};
struct Variable {};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  char op;  // one of + - * /
  ExprPtr lhs, rhs;
};
struct Power {
  ExprPtr base;
  unsigned exponent;
};
/// Kept in the tree so that printing reproduces the input grouping.
struct Group {
  ExprPtr inner;
};

} // namespace expr

/// Syntax tree of a series expression in the single variable x.
struct Expr {
  std::variant<expr::Literal, expr::Variable, expr::Negate, expr::Binary, expr::Power,
               expr::Group>
      node;
};

/// Grammar, loosest binding first:
///
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | 'x' | '(' sum ')'
///
/// Binary operators associate to the left. Exponents are nonnegative
/// integer literals; chaining them ("x^2^3") is rejected. Throws ParseError
/// with the offending byte offset.
ExprPtr parse(std::string_view text);

/// Evaluates at the given precision (>= 1). Division by a series with a
/// zero constant term throws EvalError.
Series eval(const Expr& e, std::size_t precision);
Series eval(std::string_view text, std::size_t precision);

/// Fully parenthesized rendering that parses back to an equal tree value.
std::string to_string(const Expr& e);

} // namespace fvinv
