#include "fvinv/riordan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fvinv {

namespace {

Series shift_up(const Series& f) {
  // x * f, keeping the precision of f.
  std::vector<Coefficient> cs(f.precision());
  for (std::size_t i = 1; i < cs.size(); ++i) cs[i] = f[i - 1];
  return Series(std::move(cs));
}

void check_index(const RiordanPair& t, std::size_t i, const char* what) {
  if (i >= t.truncation())
    throw std::out_of_range(std::string(what) + " " + std::to_string(i) +
                            " is beyond truncation " + std::to_string(t.truncation()));
}

} // namespace

RiordanPair::RiordanPair(const Series& beta, const Series& alpha)
    : beta_(beta.truncate(alpha.precision())), alpha_(alpha.truncate(beta.precision())) {
  if (beta_[0] == 0) throw std::invalid_argument("Riordan pair needs beta(0) != 0");
  if (alpha_[0] == 0) throw std::invalid_argument("Riordan pair needs alpha(0) != 0");
}

RiordanPair RiordanPair::identity(std::size_t truncation) {
  return {Series::constant(1, truncation), Series::constant(1, truncation)};
}

Series RiordanPair::first_column() const { return beta_ * alpha_.invert(); }

Series RiordanPair::ratio() const { return shift_up(alpha_.invert()); }

bool operator==(const RiordanPair& a, const RiordanPair& b) {
  return a.truncation() == b.truncation() && a.beta_ == b.beta_ && a.alpha_ == b.alpha_;
}

Coefficient entry(const RiordanPair& t, std::size_t n, std::size_t k) {
  check_index(t, n, "row");
  check_index(t, k, "column");
  if (k > n) return 0;
  Series column = t.first_column();
  const Series ratio = t.ratio();
  for (std::size_t i = 0; i < k; ++i) column = column * ratio;
  return column[n];
}

ExactMatrix to_matrix(const RiordanPair& t, std::size_t m) {
  check_index(t, m, "window size");
  const std::size_t n = m + 1;
  ExactMatrix out(n, n);
  Series column = t.first_column().truncate(n);
  const Series ratio = t.ratio().truncate(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k; i < n; ++i) out(i, k) = column[i];
    column = column * ratio;
  }
  return out;
}

Series apply(const RiordanPair& t, const Series& g) {
  const std::size_t n = std::min(t.truncation(), g.precision());
  return t.first_column().truncate(n) * compose(g.truncate(n), t.ratio().truncate(n));
}

RiordanPair multiply(const RiordanPair& lhs, const RiordanPair& rhs) {
  const std::size_t n = std::min(lhs.truncation(), rhs.truncation());
  const Series ratio = lhs.ratio().truncate(n);
  return {lhs.beta().truncate(n) * compose(rhs.beta().truncate(n), ratio),
          lhs.alpha().truncate(n) * compose(rhs.alpha().truncate(n), ratio)};
}

RiordanPair inverse(const RiordanPair& t) {
  const std::size_t n = t.truncation();
  if (n == 1) return {t.beta().invert(), t.alpha().invert()};
  const Series w = comp_inverse(t.ratio());
  return {compose(t.beta(), w).invert(), compose(t.alpha(), w).invert()};
}

RiordanPair pascal(std::size_t truncation) {
  return {Series::constant(1, truncation), Series::constant(1, truncation) - Series::x(truncation)};
}

RiordanPair f_matrix(std::size_t truncation) {
  const Series one_minus_x = Series::constant(1, truncation) - Series::x(truncation);
  return {one_minus_x.invert(), one_minus_x};
}

} // namespace fvinv
