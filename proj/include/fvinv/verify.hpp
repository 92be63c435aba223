#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fvinv/matrix.hpp"
#include "fvinv/series.hpp"
#include "fvinv/simplicial.hpp"

namespace fvinv {

/// Kernel basis in canonical form: one vector per free column of the
/// reduced row echelon form, free columns in increasing order, with a 1 in
/// its own free position and zeros in the other free positions.
struct NullspaceBasis {
  std::size_t dimension = 0;
  std::vector<std::vector<Coefficient>> basis;
};

/// Exact Gauss-Jordan elimination, pivoting on the first nonzero entry.
NullspaceBasis nullspace(const ExactMatrix& m);

/// Kernel of B_m - I: the fixed vectors of the (m+1) x (m+1) window of B.
NullspaceBasis eigenspace_of_B(std::size_t m);

/// True when `v` is a nonzero multiple of (1, -1, 1, ...).
bool is_alternating_multiple(const std::vector<Coefficient>& v);

/// T(1/(1-x)|1-x)^-1 applied to k/(1-x) at precision N: the only weight
/// series giving the value k on every simplex.
Series homotopy_unique(const Coefficient& k, std::size_t precision);

struct SdInvariance {
  bool invariant = false;
  /// First index where apply_B(g) and g differ, when they do.
  std::optional<std::size_t> first_difference;
};

/// Whether g = B(g) up to the precision of g.
SdInvariance check_sd_invariant(const Series& g);

struct ChiSdStep {
  unsigned k = 0;
  FVector combinatorial_fvector;  // f-vector of the k-fold subdivision
  FVector matrix_fvector;         // f B^k
  Integer chi_combinatorial;
  Integer chi_matrix;

  bool consistent() const {
    return combinatorial_fvector == matrix_fvector && chi_combinatorial == chi_matrix;
  }
};

/// Euler characteristic of sd^k(C) for k = 0..kmax, computed on the actual
/// subdivided complex and through f B^k.
std::vector<ChiSdStep> chi_sd_report(const Complex& c, unsigned kmax);

/// Both pipelines agree at every step and chi never changes.
bool chi_sd_report_holds(const std::vector<ChiSdStep>& steps);

struct EigenWindow {
  std::size_t m = 0;
  NullspaceBasis space;
  bool pass = false;  // dimension 1, alternating basis
};

std::vector<EigenWindow> eigen_report(std::size_t max_window);

/// "(1,-1,1)"
std::string format_vector(const std::vector<Coefficient>& v);
std::string format_vector(const FVector& v);

} // namespace fvinv
