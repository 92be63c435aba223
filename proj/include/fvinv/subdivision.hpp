#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fvinv/matrix.hpp"
#include "fvinv/series.hpp"

namespace fvinv {

/// f-vector (f_0, ..., f_m): f_i counts the i-dimensional faces. There is
/// no entry for the empty face.
using FVector = std::vector<Integer>;

enum class StirlingKind { first, second };

/// Triangular table of Stirling numbers for 0 <= j <= i <= bound, built by
/// recurrence:
///   second kind  {n,k} = k {n-1,k} + {n-1,k-1}
///   first kind   [n,k] = (n-1) [n-1,k] + [n-1,k-1]   (unsigned)
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, std::size_t bound);

  StirlingKind kind() const noexcept { return kind_; }
  std::size_t bound() const noexcept { return rows_.size() - 1; }

  /// Zero when j > i. Throws std::out_of_range when i > bound().
  const Integer& operator()(std::size_t i, std::size_t j) const;
  std::span<const Integer> row(std::size_t i) const { return rows_.at(i); }

 private:
  StirlingKind kind_;
  std::vector<std::vector<Integer>> rows_;
};

Integer stirling2(std::size_t i, std::size_t j);
/// Unsigned Stirling number of the first kind.
Integer stirling1(std::size_t i, std::size_t j);

// (m+1) x (m+1) windows. Indices are shifted by one so that row/column i
// corresponds to the (i+1)-element level:
//   S_ij = {i+1, j+1},  D = diag((i+1)!),  B_ij = (j+1)! {i+1, j+1},
//   S^-1_ij = (-1)^(i-j) [i+1, j+1].
// B is built from its entry formula, not as the product S D.
ExactMatrix matrix_S(std::size_t m);
ExactMatrix matrix_D(std::size_t m);
ExactMatrix matrix_B(std::size_t m);
ExactMatrix matrix_S_inverse(std::size_t m);

/// f-vector of the barycentric subdivision: f_j' = sum_i f_i (j+1)! {i+1, j+1}.
/// The f-vector multiplies B from the left as a row.
FVector sd_fvector(std::span<const Integer> f);

/// B acting on series coefficients as a column: eta_i = sum_{j<=i} b_ij zeta_j.
/// Precision is preserved.
Series apply_B(const Series& g);

/// S acting on series coefficients as a column.
Series apply_S(const Series& g);

/// D(1/(1+x)) = sum (i+1)! (-x)^i.
Series delta(std::size_t precision);

} // namespace fvinv
