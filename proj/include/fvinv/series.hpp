#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fvinv/rational.hpp"

namespace fvinv {

/// Truncated formal power series over the rationals.
///
/// A Series knows exactly `precision()` coefficients, c_0 .. c_{N-1}; nothing
/// is claimed about higher-order terms. Every binary operation returns a
/// series truncated to the smallest precision its inputs justify, so results
/// never report more coefficients than are actually known.
///
/// Values are immutable once built.
class Series {
 public:
  /// Throws EmptySeriesError when `coeffs` is empty.
  explicit Series(std::vector<Coefficient> coeffs);

  static Series from_coeffs(std::span<const Coefficient> coeffs);
  static Series zero(std::size_t precision);
  static Series constant(const Coefficient& c, std::size_t precision);
  /// The identity series x (just 0 at precision 1).
  static Series x(std::size_t precision);
  /// c / (1 - r x) = sum c r^n x^n.
  static Series geometric(const Coefficient& c, const Coefficient& ratio,
                          std::size_t precision);

  std::size_t precision() const noexcept { return coeffs_.size(); }
  const std::vector<Coefficient>& coeffs() const noexcept { return coeffs_; }

  /// Throws std::out_of_range when n >= precision().
  const Coefficient& coeff(std::size_t n) const;
  const Coefficient& operator[](std::size_t n) const { return coeffs_[n]; }

  /// Index of the first nonzero coefficient; empty for the zero series,
  /// whose valuation lies beyond the known precision.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  /// Keeps the first min(n, precision()) coefficients. n must be >= 1.
  Series truncate(std::size_t n) const;

  /// Multiplicative inverse; throws NotInvertibleError when c_0 == 0.
  Series invert() const;

  /// Coefficient-wise comparison up to the smaller of the two precisions.
  friend bool operator==(const Series& a, const Series& b);

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Coefficient& s, const Series& a);
  Series operator-() const;

 private:
  std::vector<Coefficient> coeffs_;
};

Series add(const Series& f, const Series& g);
Series mul(const Series& f, const Series& g);
Series invert(const Series& f);

/// f(g(x)). Requires g(0) == 0 (CompositionDomainError otherwise); the
/// result has precision min(prec f, prec g).
Series compose(const Series& f, const Series& g);

/// Compositional inverse v of w, i.e. w(v(x)) = v(w(x)) = x. Requires
/// w_0 == 0 and w_1 != 0 (ReversionDomainError otherwise).
///
/// Solved term by term: with v_0 = 0 and v_1 = 1/w_1, the coefficient of x^n
/// in w(v) for n >= 2 is w_1 v_n plus terms involving only v_1 .. v_{n-1}, so
/// each v_n follows from the ones before it. Powers of v are kept as a
/// triangular table filled one column (degree) at a time; O(N^3) overall.
Series comp_inverse(const Series& w);

/// Integer power by repeated squaring; pow(f, 0) is 1.
Series pow(const Series& f, unsigned exponent);

/// Renders a finite polynomial such as "1 - 2*x + 1/3*x^2" (zero terms
/// omitted, "0" for the zero series). The output parses back to the same
/// coefficients with the expression parser.
std::string to_polynomial_string(const Series& f);

} // namespace fvinv
