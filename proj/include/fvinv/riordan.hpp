#pragma once

#include <cstddef>

#include "fvinv/matrix.hpp"
#include "fvinv/series.hpp"

namespace fvinv {

/// An element T(beta | alpha) of the Riordan group.
///
/// Column k of the (infinite, lower-triangular) matrix holds the
/// coefficients of (beta/alpha) * (x/alpha)^k: a geometric progression with
/// first term beta/alpha and ratio x/alpha. Both series must have a nonzero
/// constant term; they are stored truncated to a shared precision.
class RiordanPair {
 public:
  /// Throws std::invalid_argument when beta(0) == 0 or alpha(0) == 0. The
  /// truncation is min(prec beta, prec alpha).
  RiordanPair(const Series& beta, const Series& alpha);

  static RiordanPair identity(std::size_t truncation);

  const Series& beta() const noexcept { return beta_; }
  const Series& alpha() const noexcept { return alpha_; }
  std::size_t truncation() const noexcept { return beta_.precision(); }

  /// beta / alpha, the first column.
  Series first_column() const;
  /// x / alpha, the column ratio. Valuation exactly 1.
  Series ratio() const;

  /// Same truncation and coefficient-for-coefficient equal series.
  friend bool operator==(const RiordanPair& a, const RiordanPair& b);

 private:
  Series beta_;
  Series alpha_;
};

/// [x^n] (beta/alpha) (x/alpha)^k; zero above the diagonal. Throws
/// std::out_of_range when n or k is not below the truncation.
Coefficient entry(const RiordanPair& t, std::size_t n, std::size_t k);

/// The (m+1) x (m+1) top-left window, columns built incrementally
/// (column k+1 = column k * x/alpha). Requires m < truncation.
ExactMatrix to_matrix(const RiordanPair& t, std::size_t m);

/// The linear action g -> (beta/alpha) g(x/alpha). Precision of the result
/// is min(truncation, prec g); it agrees with the matrix acting on g as a
/// column vector.
Series apply(const RiordanPair& t, const Series& g);

/// T(b1|a1) T(b2|a2) = T(b1 * b2(x/a1) | a1 * a2(x/a1)).
RiordanPair multiply(const RiordanPair& lhs, const RiordanPair& rhs);

/// T(beta|alpha)^-1 = T(1/beta(w) | 1/alpha(w)) with w the compositional
/// inverse of x/alpha.
RiordanPair inverse(const RiordanPair& t);

/// Pascal's triangle, T(1 | 1 - x).
RiordanPair pascal(std::size_t truncation);

/// T(1/(1-x) | 1 - x): row n is the f-vector of the n-simplex,
/// entries C(n+1, k+1).
RiordanPair f_matrix(std::size_t truncation);

} // namespace fvinv
