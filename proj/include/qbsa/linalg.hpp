#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qbsa/scalar.hpp"

namespace qbsa {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Every row must have exactly `cols` entries.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Rank over Q (characteristic 0, fraction-free elimination) or over F_p.
std::size_t matrix_rank(const IntMatrix& m, Characteristic c);

/// Bareiss determinant of a square matrix.
BigInt determinant(const IntMatrix& m);

/// left * m * right == diagonal, left and right unimodular, and each
/// nonzero diagonal entry divides the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  /// diagonal(i, i) for i < min(rows, cols), all non-negative.
  std::vector<BigInt> entries;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace qbsa
