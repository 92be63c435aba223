#include <catch_amalgamated.hpp>

#include "fvinv/riordan.hpp"
#include "fvinv/simplicial.hpp"
#include "oracles.hpp"

using fvinv::Coefficient;
using fvinv::ExactMatrix;
using fvinv::Integer;
using fvinv::RiordanPair;
using fvinv::Series;

namespace {

Series one_minus_x(std::size_t n) { return Series::geometric(1, 0, n) - Series::x(n); }
Series one_plus_x(std::size_t n) { return Series::geometric(1, 0, n) + Series::x(n); }

ExactMatrix closed_form(std::size_t m, auto&& value) {
  ExactMatrix out(m + 1, m + 1);
  for (std::size_t n = 0; n <= m; ++n)
    for (std::size_t k = 0; k <= n; ++k) out(n, k) = value(n, k);
  return out;
}

RiordanPair random_pair(oracle::Gen& gen, std::size_t n) {
  return {gen.unit_series(n), gen.unit_series(n)};
}

} // namespace

TEST_CASE("entry", "[riordan]") {
  CHECK(fvinv::entry(fvinv::pascal(8), 4, 2) == 6);
  CHECK(fvinv::entry(fvinv::f_matrix(8), 2, 0) == 3);
  CHECK(fvinv::entry(fvinv::f_matrix(8), 1, 3) == 0);
  CHECK_THROWS_AS(fvinv::entry(fvinv::pascal(4), 4, 0), std::out_of_range);
  CHECK_THROWS_AS(fvinv::entry(fvinv::pascal(4), 0, 4), std::out_of_range);
}

TEST_CASE("to_matrix", "[riordan]") {
  using Rows = std::vector<std::vector<Coefficient>>;
  CHECK(fvinv::to_matrix(fvinv::pascal(3), 2) == ExactMatrix(Rows{{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}));
  // rows are f(point), f(edge), f(triangle)
  CHECK(fvinv::to_matrix(fvinv::f_matrix(3), 2) ==
        ExactMatrix(Rows{{1, 0, 0}, {2, 1, 0}, {3, 3, 1}}));
  CHECK(fvinv::to_matrix(RiordanPair::identity(2), 1).is_identity());
  CHECK_THROWS_AS(fvinv::to_matrix(fvinv::pascal(3), 3), std::out_of_range);
}

TEST_CASE("admissibility is enforced", "[riordan]") {
  CHECK_THROWS_AS(RiordanPair(Series::x(3), one_minus_x(3)), std::invalid_argument);
  CHECK_THROWS_AS(RiordanPair(one_minus_x(3), Series::x(3)), std::invalid_argument);
  const RiordanPair t(Series::constant(2, 5), one_minus_x(3));
  CHECK(t.truncation() == 3);
}

TEST_CASE("pascal and f_matrix against binomial coefficients", "[riordan][oracle]") {
  const std::size_t n = 20;
  const auto c = oracle::binomials(n + 1);
  const ExactMatrix p = fvinv::to_matrix(fvinv::pascal(n), n - 1);
  const ExactMatrix f = fvinv::to_matrix(fvinv::f_matrix(n), n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(p(i, k) == Coefficient(c[i][k]));
      CHECK(f(i, k) == Coefficient(c[i + 1][k + 1]));
    }
  CHECK(fvinv::to_matrix(fvinv::pascal(n + 1), n).drop_leading(1) == f);
}

TEST_CASE("f_matrix rows are f-vectors of simplices", "[riordan]") {
  const ExactMatrix f = fvinv::to_matrix(fvinv::f_matrix(8), 6);
  for (int n = 0; n <= 6; ++n) {
    const auto fv = fvinv::f_vector(fvinv::simplex(n));
    for (std::size_t k = 0; k < fv.size(); ++k) CHECK(f(n, k) == Coefficient(fv[k]));
  }
}

TEST_CASE("apply", "[riordan]") {
  const std::size_t n = 16;
  // chi of every simplex is 1
  CHECK(fvinv::apply(fvinv::f_matrix(n), Series::geometric(1, -1, n)) ==
        Series::geometric(1, 1, n));
  CHECK(fvinv::apply(fvinv::f_matrix(n), Series::zero(n)).is_zero());
  // row sums of Pascal's triangle
  CHECK(fvinv::apply(fvinv::pascal(n), Series::geometric(1, 1, n)) == Series::geometric(1, 2, n));
  CHECK(fvinv::apply(fvinv::pascal(n), Series::zero(5)).precision() == 5);
}

TEST_CASE("apply agrees with the matrix acting on a column", "[riordan][property]") {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(gen.uniform(0, 9));
    const RiordanPair t = random_pair(gen, n);
    const Series g = gen.series(n);
    const auto column = fvinv::to_matrix(t, n - 1).apply_column(g.coeffs());
    CHECK(fvinv::apply(t, g).coeffs() == column);
  }
}

TEST_CASE("multiply", "[riordan]") {
  const std::size_t n = 12;
  const auto c = oracle::binomials(n);
  const RiordanPair square = fvinv::multiply(fvinv::pascal(n), fvinv::pascal(n));
  CHECK(square == RiordanPair(Series::constant(1, n), Series::geometric(1, 0, n) -
                                                          Coefficient(2) * Series::x(n)));
  CHECK(fvinv::to_matrix(square, n - 1) == closed_form(n - 1, [&](std::size_t i, std::size_t k) {
          return Coefficient(c[i][k] * (Integer(1) << (i - k)));
        }));

  const RiordanPair f = fvinv::f_matrix(n);
  CHECK(fvinv::multiply(f, RiordanPair::identity(n)) == f);

  const RiordanPair f_inv(one_plus_x(n).invert(), one_plus_x(n));
  CHECK(fvinv::multiply(f, f_inv) == RiordanPair::identity(n));
}

TEST_CASE("inverse", "[riordan]") {
  const std::size_t n = 12;
  const auto c = oracle::binomials(n);
  CHECK(fvinv::inverse(fvinv::f_matrix(n)) == RiordanPair(one_plus_x(n).invert(), one_plus_x(n)));
  CHECK(fvinv::inverse(RiordanPair::identity(n)) == RiordanPair::identity(n));

  const RiordanPair pinv = fvinv::inverse(fvinv::pascal(n));
  CHECK(pinv == RiordanPair(Series::constant(1, n), one_plus_x(n)));
  CHECK(fvinv::to_matrix(pinv, n - 1) == closed_form(n - 1, [&](std::size_t i, std::size_t k) {
          return Coefficient((i - k) % 2 == 0 ? c[i][k] : Integer(-c[i][k]));
        }));
  CHECK((fvinv::to_matrix(fvinv::pascal(n), n - 1) * fvinv::to_matrix(pinv, n - 1)).is_identity());

  CHECK(fvinv::inverse(RiordanPair(Series::constant(3, 1), Series::constant(2, 1))) ==
        RiordanPair(Series::constant(Coefficient(1, 3), 1), Series::constant(Coefficient(1, 2), 1)));
}

TEST_CASE("group laws on random pairs", "[riordan][property]") {
  oracle::Gen gen(314);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(gen.uniform(0, 16));
    const std::size_t m = n - 1;
    const RiordanPair a = random_pair(gen, n);
    const RiordanPair b = random_pair(gen, n);
    CHECK(fvinv::to_matrix(fvinv::multiply(a, b), m) ==
          fvinv::to_matrix(a, m) * fvinv::to_matrix(b, m));
    CHECK(fvinv::to_matrix(fvinv::multiply(a, fvinv::inverse(a)), m).is_identity());
    CHECK(fvinv::to_matrix(fvinv::multiply(fvinv::inverse(a), a), m).is_identity());

    const Series g = gen.series(n), h = gen.series(n);
    CHECK(fvinv::apply(fvinv::multiply(a, b), g) == fvinv::apply(a, fvinv::apply(b, g)));

    const Coefficient s = gen.rational(), t = gen.rational();
    CHECK(fvinv::apply(a, s * g + t * h) == s * fvinv::apply(a, g) + t * fvinv::apply(a, h));
  }
}

TEST_CASE("matrices are lower triangular with nonzero diagonal", "[riordan][property]") {
  oracle::Gen gen(8);
  for (int trial = 0; trial < 10; ++trial) {
    const RiordanPair t = random_pair(gen, 9);
    const ExactMatrix m = fvinv::to_matrix(t, 8);
    CHECK(m.is_lower_triangular());
    for (std::size_t i = 0; i < 9; ++i) CHECK(m(i, i) != 0);
  }
}
