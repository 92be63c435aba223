#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fvinv/rational.hpp"

namespace fvinv {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument when the rows are ragged.
  explicit ExactMatrix(const std::vector<std::vector<Coefficient>>& rows);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Coefficient& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Coefficient& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Coefficient> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  /// Drops the first `k` rows and columns.
  ExactMatrix drop_leading(std::size_t k) const;
  /// Top-left n x n block.
  ExactMatrix leading_block(std::size_t n) const;

  bool is_identity() const;
  bool is_lower_triangular() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  /// M v with v as a column.
  std::vector<Coefficient> apply_column(std::span<const Coefficient> v) const;
  /// v M with v as a row.
  std::vector<Coefficient> apply_row(std::span<const Coefficient> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coefficient> data_;
};

} // namespace fvinv
