// SPDX-License-Identifier: Apache-2.0
#include "eulertower/chain/matrix.hpp"

#include "eulertower/error.hpp"

namespace eulertower::chain {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw InputError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                     std::to_string(rows) + "x" + std::to_string(cols));
}

IntegerMatrix IntegerMatrix::fromRows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::isZero() const {
  for (const auto& e : entries_)
    if (sgn(e) != 0) return false;
  return true;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix IntegerMatrix::scaled(const Integer& k) const {
  IntegerMatrix out = *this;
  for (auto& e : out.entries_) e *= k;
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum shape mismatch");
  IntegerMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    }
  return out;
}

void IntegerMatrix::place(const IntegerMatrix& block, std::size_t r, std::size_t c) {
  if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw InputError("block out of range");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
}

} // namespace eulertower::chain
