#include "fvinv/verify.hpp"

#include <algorithm>
#include <utility>

#include "fvinv/riordan.hpp"
#include "fvinv/subdivision.hpp"

namespace fvinv {

NullspaceBasis nullspace(const ExactMatrix& m) {
  ExactMatrix r = m;
  const std::size_t rows = r.rows(), cols = r.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && r(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(sel, j), r(pivot_row, j));
    const Coefficient inv = 1 / r(pivot_row, col);
    for (std::size_t j = col; j < cols; ++j) r(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || r(i, col) == 0) continue;
      const Coefficient factor = r(i, col);
      for (std::size_t j = col; j < cols; ++j) r(i, j) -= factor * r(pivot_row, j);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }

  NullspaceBasis out;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coefficient> v(cols);
    v[free] = 1;
    for (std::size_t p = 0; p < pivot_cols.size(); ++p) v[pivot_cols[p]] = -r(p, free);
    out.basis.push_back(std::move(v));
  }
  out.dimension = out.basis.size();
  return out;
}

NullspaceBasis eigenspace_of_B(std::size_t m) {
  return nullspace(matrix_B(m) - ExactMatrix::identity(m + 1));
}

bool is_alternating_multiple(const std::vector<Coefficient>& v) {
  if (v.empty() || v[0] == 0) return false;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != (j % 2 == 0 ? v[0] : Coefficient(-v[0]))) return false;
  return true;
}

Series homotopy_unique(const Coefficient& k, std::size_t precision) {
  return apply(inverse(f_matrix(precision)), Series::geometric(k, 1, precision));
}

SdInvariance check_sd_invariant(const Series& g) {
  const Series image = apply_B(g);
  for (std::size_t i = 0; i < g.precision(); ++i)
    if (image[i] != g[i]) return {false, i};
  return {true, std::nullopt};
}

namespace {

Integer alternating_sum(const FVector& f) {
  Integer s = 0;
  for (std::size_t k = 0; k < f.size(); ++k) s += k % 2 == 0 ? f[k] : Integer(-f[k]);
  return s;
}

} // namespace

std::vector<ChiSdStep> chi_sd_report(const Complex& c, unsigned kmax) {
  std::vector<ChiSdStep> steps;
  Complex cur = c;
  FVector via_matrix = f_vector(c);
  for (unsigned k = 0; k <= kmax; ++k) {
    if (k > 0) {
      cur = barycentric_subdivide(cur);
      via_matrix = sd_fvector(via_matrix);
    }
    ChiSdStep step;
    step.k = k;
    step.combinatorial_fvector = f_vector(cur);
    step.matrix_fvector = via_matrix;
    step.chi_combinatorial = chi(cur);
    step.chi_matrix = alternating_sum(via_matrix);
    steps.push_back(std::move(step));
  }
  return steps;
}

bool chi_sd_report_holds(const std::vector<ChiSdStep>& steps) {
  if (steps.empty()) return false;
  return std::all_of(steps.begin(), steps.end(), [&](const ChiSdStep& s) {
    return s.consistent() && s.chi_combinatorial == steps.front().chi_combinatorial;
  });
}

std::vector<EigenWindow> eigen_report(std::size_t max_window) {
  std::vector<EigenWindow> out;
  for (std::size_t m = 0; m <= max_window; ++m) {
    EigenWindow w;
    w.m = m;
    w.space = eigenspace_of_B(m);
    w.pass = w.space.dimension == 1 && is_alternating_multiple(w.space.basis.front());
    out.push_back(std::move(w));
  }
  return out;
}

std::string format_vector(const std::vector<Coefficient>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string format_vector(const FVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

} // namespace fvinv
