#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's arithmetic; coefficient sequences are plain vectors.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fvinv/rational.hpp"
#include "fvinv/series.hpp"
#include "fvinv/simplicial.hpp"

namespace oracle {

using fvinv::Coefficient;
using fvinv::Integer;
using Coeffs = std::vector<Coefficient>;

/// Pascal's rule table, C(n, k) for n, k <= bound.
inline std::vector<std::vector<Integer>> binomials(std::size_t bound) {
  std::vector<std::vector<Integer>> c(bound + 1, std::vector<Integer>(bound + 1, 0));
  for (std::size_t n = 0; n <= bound; ++n) {
    c[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}

/// Set partitions of {1..n} into k blocks, by enumerating restricted growth
/// strings.
inline Integer count_set_partitions(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<unsigned> a(n, 0);
  Integer count = 0;
  auto rec = [&](auto&& self, unsigned i, unsigned blocks) -> void {
    if (i == n) {
      if (blocks == k) ++count;
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  a[0] = 0;
  rec(rec, 1, 1);
  return count;
}

/// Permutations of n elements with exactly k cycles, by enumeration.
inline Integer count_permutations_by_cycles(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  Integer count = 0;
  do {
    std::vector<bool> seen(n, false);
    unsigned cycles = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (unsigned j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    if (cycles == k) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline Coeffs convolve(const Coeffs& a, const Coeffs& b, std::size_t n) {
  Coeffs r(n);
  for (std::size_t i = 0; i < n && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Solves a * r = 1 coefficient by coefficient.
inline Coeffs reciprocal(const Coeffs& a) {
  Coeffs r(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Coefficient rhs = n == 0 ? 1 : 0;
    for (std::size_t i = 1; i <= n; ++i) rhs -= a[i] * r[n - i];
    r[n] = rhs / a[0];
  }
  return r;
}

/// Lagrange inversion: [x^n] w^{-1} = (1/n) [x^{n-1}] (x / w)^n.
inline Coeffs lagrange_inverse(const Coeffs& w) {
  const std::size_t n = w.size();
  const Coeffs phi = reciprocal(Coeffs(w.begin() + 1, w.end()));  // x / w, precision n - 1
  Coeffs v(n);
  Coeffs power = {1};
  for (std::size_t k = 1; k < n; ++k) {
    power = convolve(power, phi, phi.size());
    v[k] = power[k - 1] / Coefficient(k);
  }
  return v;
}

/// Exact check of w(v(x)) == x up to n coefficients, by summing powers.
inline Coeffs substitute(const Coeffs& f, const Coeffs& g) {
  const std::size_t n = std::min(f.size(), g.size());
  Coeffs result(n);
  Coeffs power(n);
  power[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) result[i] += f[k] * power[i];
    power = convolve(power, g, n);
  }
  return result;
}

// Seeded generators for property tests.

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  Coefficient rational(int range = 9) {
    std::uniform_int_distribution<int> num(-range, range), den(1, range);
    return Coefficient(num(rng_), den(rng_));
  }

  Coefficient nonzero_rational(int range = 9) {
    Coefficient c;
    do c = rational(range);
    while (c == 0);
    return c;
  }

  fvinv::Series series(std::size_t n) {
    Coeffs cs(n);
    for (auto& c : cs) c = rational();
    return fvinv::Series(std::move(cs));
  }

  fvinv::Series unit_series(std::size_t n) {
    Coeffs cs = series(n).coeffs();
    cs[0] = nonzero_rational();
    return fvinv::Series(std::move(cs));
  }

  /// Valuation at least `min_val`.
  fvinv::Series series_with_valuation(std::size_t n, std::size_t min_val) {
    Coeffs cs = series(n).coeffs();
    for (std::size_t i = 0; i < min_val && i < n; ++i) cs[i] = 0;
    return fvinv::Series(std::move(cs));
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Downward closure of a few random nonempty subsets of {0..vertices-1}.
  fvinv::Complex complex(int vertices) {
    const int count = uniform(1, 5);
    std::vector<fvinv::Face> tops;
    for (int t = 0; t < count; ++t) {
      std::vector<fvinv::Vertex> vs;
      for (int v = 0; v < vertices; ++v)
        if (uniform(0, 2) == 0) vs.push_back(v);
      if (vs.empty()) vs.push_back(uniform(0, vertices - 1));
      tops.emplace_back(std::move(vs));
    }
    return fvinv::Complex::from_maximal(tops);
  }

  /// Expression text whose evaluation never divides by a non-unit.
  std::string expression(int depth) {
    const auto num = [this](int lo, int hi) { return std::to_string(uniform(lo, hi)); };
    if (depth == 0 || uniform(0, 3) == 0) {
      switch (uniform(0, 2)) {
        case 0: return "x";
        case 1: return num(0, 9);
        default: return "(" + num(1, 9) + "+x)";
      }
    }
    switch (uniform(0, 5)) {
      case 0: return "(" + expression(depth - 1) + "+" + expression(depth - 1) + ")";
      case 1: return "(" + expression(depth - 1) + "-" + expression(depth - 1) + ")";
      case 2: return expression(depth - 1) + "*" + expression(depth - 1);
      case 3: return expression(depth - 1) + "/(" + num(1, 5) + "-" + num(0, 5) + "*x)";
      case 4: return "-" + expression(depth - 1);
      default: return "(" + expression(depth - 1) + ")^" + num(0, 3);
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

inline Coeffs to_coeffs(std::initializer_list<Coefficient> cs) { return Coeffs(cs); }

} // namespace oracle
