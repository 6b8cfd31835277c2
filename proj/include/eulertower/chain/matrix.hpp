// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eulertower/polycore/ring.hpp"

namespace eulertower::chain {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  static IntegerMatrix fromRows(const std::vector<std::vector<long>>& rows, std::size_t cols);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Integer>& entries() const { return entries_; }

  bool isZero() const;
  IntegerMatrix transposed() const;
  IntegerMatrix scaled(const Integer& k) const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  /// Kronecker product; row (i, k) -> i * b.rows + k.
  friend IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b);

  /// Copies `block` with its top-left corner at (r, c).
  void place(const IntegerMatrix& block, std::size_t r, std::size_t c);

  bool operator==(const IntegerMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

} // namespace eulertower::chain
