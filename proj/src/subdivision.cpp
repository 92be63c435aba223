#include "fvinv/subdivision.hpp"

#include <stdexcept>
#include <string>

namespace fvinv {

StirlingTable::StirlingTable(StirlingKind kind, std::size_t bound)
    : kind_(kind), rows_(bound + 1) {
  rows_[0] = {Integer(1)};
  for (std::size_t n = 1; n <= bound; ++n) {
    auto& cur = rows_[n];
    const auto& prev = rows_[n - 1];
    cur.assign(n + 1, Integer(0));
    for (std::size_t k = 1; k <= n; ++k) {
      const Integer same = k < n ? prev[k] : Integer(0);
      const Integer factor = kind == StirlingKind::second ? Integer(k) : Integer(n - 1);
      cur[k] = factor * same + prev[k - 1];
    }
  }
}

const Integer& StirlingTable::operator()(std::size_t i, std::size_t j) const {
  static const Integer zero = 0;
  if (i >= rows_.size())
    throw std::out_of_range("Stirling index " + std::to_string(i) + " beyond table bound " +
                            std::to_string(bound()));
  return j > i ? zero : rows_[i][j];
}

Integer stirling2(std::size_t i, std::size_t j) {
  if (j > i) return 0;
  return StirlingTable(StirlingKind::second, i)(i, j);
}

Integer stirling1(std::size_t i, std::size_t j) {
  if (j > i) return 0;
  return StirlingTable(StirlingKind::first, i)(i, j);
}

ExactMatrix matrix_S(std::size_t m) {
  const StirlingTable s2(StirlingKind::second, m + 1);
  ExactMatrix out(m + 1, m + 1);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= i; ++j) out(i, j) = Coefficient(s2(i + 1, j + 1));
  return out;
}

ExactMatrix matrix_D(std::size_t m) {
  ExactMatrix out(m + 1, m + 1);
  Integer fact = 1;
  for (std::size_t i = 0; i <= m; ++i) {
    fact *= i + 1;
    out(i, i) = Coefficient(fact);
  }
  return out;
}

ExactMatrix matrix_B(std::size_t m) {
  const StirlingTable s2(StirlingKind::second, m + 1);
  ExactMatrix out(m + 1, m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    Integer fact = 1;
    for (std::size_t j = 0; j <= i; ++j) {
      fact *= j + 1;
      out(i, j) = Coefficient(fact * s2(i + 1, j + 1));
    }
  }
  return out;
}

ExactMatrix matrix_S_inverse(std::size_t m) {
  const StirlingTable s1(StirlingKind::first, m + 1);
  ExactMatrix out(m + 1, m + 1);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Integer v = s1(i + 1, j + 1);
      out(i, j) = Coefficient((i - j) % 2 == 0 ? v : Integer(-v));
    }
  return out;
}

FVector sd_fvector(std::span<const Integer> f) {
  if (f.empty()) return {};
  const std::size_t m = f.size() - 1;
  const StirlingTable s2(StirlingKind::second, m + 1);
  FVector out(f.size(), Integer(0));
  Integer fact = 1;
  for (std::size_t j = 0; j <= m; ++j) {
    fact *= j + 1;
    for (std::size_t i = j; i <= m; ++i) out[j] += f[i] * fact * s2(i + 1, j + 1);
  }
  return out;
}

namespace {

Series lower_triangular_apply(const ExactMatrix& m, const Series& g) {
  const std::size_t n = g.precision();
  std::vector<Coefficient> eta(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) eta[i] += m(i, j) * g[j];
  return Series(std::move(eta));
}

} // namespace

Series apply_B(const Series& g) { return lower_triangular_apply(matrix_B(g.precision() - 1), g); }

Series apply_S(const Series& g) { return lower_triangular_apply(matrix_S(g.precision() - 1), g); }

Series delta(std::size_t precision) {
  std::vector<Coefficient> cs(precision);
  Integer fact = 1;
  for (std::size_t i = 0; i < precision; ++i) {
    fact *= i + 1;
    cs[i] = Coefficient(i % 2 == 0 ? fact : Integer(-fact));
  }
  return Series(std::move(cs));
}

} // namespace fvinv
