#include "fvinv/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "fvinv/errors.hpp"

namespace fvinv {

Series::Series(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw EmptySeriesError();
}

Series Series::from_coeffs(std::span<const Coefficient> coeffs) {
  return Series(std::vector<Coefficient>(coeffs.begin(), coeffs.end()));
}

Series Series::zero(std::size_t precision) {
  return Series(std::vector<Coefficient>(precision));
}

Series Series::constant(const Coefficient& c, std::size_t precision) {
  std::vector<Coefficient> cs(precision);
  if (!cs.empty()) cs[0] = c;
  return Series(std::move(cs));
}

Series Series::x(std::size_t precision) {
  std::vector<Coefficient> cs(precision);
  if (cs.size() > 1) cs[1] = 1;
  return Series(std::move(cs));
}

Series Series::geometric(const Coefficient& c, const Coefficient& ratio,
                         std::size_t precision) {
  std::vector<Coefficient> cs(precision);
  Coefficient term = c;
  for (auto& v : cs) {
    v = term;
    term *= ratio;
  }
  return Series(std::move(cs));
}

const Coefficient& Series::coeff(std::size_t n) const {
  if (n >= coeffs_.size())
    throw std::out_of_range("coefficient " + std::to_string(n) +
                            " requested from a series of precision " +
                            std::to_string(coeffs_.size()));
  return coeffs_[n];
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return std::nullopt;
}

Series Series::truncate(std::size_t n) const {
  n = std::min(n, coeffs_.size());
  return Series(std::vector<Coefficient>(coeffs_.begin(), coeffs_.begin() + n));
}

Series Series::invert() const {
  if (coeffs_[0] == 0)
    throw NotInvertibleError("series with zero constant term has no inverse");
  const std::size_t n = precision();
  const Coefficient inv0 = 1 / coeffs_[0];
  std::vector<Coefficient> g(n);
  g[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Coefficient acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * g[k - i];
    g[k] = -acc * inv0;
  }
  return Series(std::move(g));
}

bool operator==(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + n, b.coeffs_.begin());
}

Series operator+(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Coefficient> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = a.coeffs_[i] + b.coeffs_[i];
  return Series(std::move(r));
}

Series operator-(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Coefficient> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = a.coeffs_[i] - b.coeffs_[i];
  return Series(std::move(r));
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Coefficient> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Series(std::move(r));
}

Series operator*(const Coefficient& s, const Series& a) {
  std::vector<Coefficient> r(a.coeffs_);
  for (auto& c : r) c *= s;
  return Series(std::move(r));
}

Series Series::operator-() const {
  std::vector<Coefficient> r(coeffs_);
  for (auto& c : r) c = -c;
  return Series(std::move(r));
}

Series add(const Series& f, const Series& g) { return f + g; }
Series mul(const Series& f, const Series& g) { return f * g; }
Series invert(const Series& f) { return f.invert(); }

Series compose(const Series& f, const Series& g) {
  if (g[0] != 0)
    throw CompositionDomainError("inner series of a composition must have zero constant term");
  const std::size_t n = std::min(f.precision(), g.precision());
  const Series inner = g.truncate(n);
  // Horner: f_0 + g (f_1 + g (f_2 + ...)).
  Series acc = Series::constant(f[n - 1], n);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = acc * inner;
    std::vector<Coefficient> cs = acc.coeffs();
    cs[0] += f[i];
    acc = Series(std::move(cs));
  }
  return acc;
}

Series comp_inverse(const Series& w) {
  const std::size_t n = w.precision();
  if (w[0] != 0 || n < 2 || w[1] == 0)
    throw ReversionDomainError("compositional inverse needs a series of valuation exactly 1");
  const Coefficient inv_w1 = 1 / w[1];

  // powers[k][d] = [x^d] v^k for 1 <= k < n. Since v_0 = 0, [x^d] v^k
  // vanishes for d < k and only involves v_1 .. v_{d-k+1}.
  std::vector<std::vector<Coefficient>> powers(n, std::vector<Coefficient>(n));
  std::vector<Coefficient> v(n);
  for (std::size_t d = 1; d < n; ++d) {
    Coefficient rest = 0;
    for (std::size_t k = 2; k <= d; ++k) {
      Coefficient c = 0;
      for (std::size_t i = 1; i + (k - 1) <= d; ++i) c += v[i] * powers[k - 1][d - i];
      powers[k][d] = c;
      rest += w[k] * c;
    }
    v[d] = ((d == 1 ? Coefficient(1) : Coefficient(0)) - rest) * inv_w1;
    powers[1][d] = v[d];
  }
  return Series(std::move(v));
}

Series pow(const Series& f, unsigned exponent) {
  Series result = Series::constant(1, f.precision());
  Series base = f;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string to_polynomial_string(const Series& f) {
  std::string out;
  for (std::size_t i = 0; i < f.precision(); ++i) {
    const Coefficient& c = f[i];
    if (c == 0) continue;
    Coefficient mag = c < 0 ? Coefficient(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

} // namespace fvinv
