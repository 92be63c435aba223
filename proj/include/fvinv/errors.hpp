#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fvinv {

// Series arithmetic

struct EmptySeriesError : std::invalid_argument {
  EmptySeriesError() : std::invalid_argument("series needs at least one coefficient") {}
};

/// Multiplicative inverse requested for a series whose constant term is zero.
struct NotInvertibleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// compose(f, g) with g(0) != 0.
struct CompositionDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Compositional inverse requested for a series whose valuation is not 1.
struct ReversionDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Simplicial complexes

/// Raised before a complex with more than the allowed number of faces is built.
struct FaceGuardError : std::length_error {
  using std::length_error::length_error;
};

struct InvalidComplexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A weight series does not reach the dimension of the complex it is paired with.
struct InsufficientPrecisionError : std::domain_error {
  using std::domain_error::domain_error;
};

// Expressions

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct EvalError : std::domain_error {
  using std::domain_error::domain_error;
};

} // namespace fvinv
