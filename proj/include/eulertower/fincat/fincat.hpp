// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulertower/polycore/rational_function.hpp"

namespace eulertower::fincat {

/// Hom-set sizes of a finite category: entry (i, j) counts morphisms from
/// object i to object j. Diagonal entries are at least 1.
class HomCountMatrix {
public:
  explicit HomCountMatrix(std::vector<std::vector<Integer>> rows);
  HomCountMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static HomCountMatrix discrete(std::size_t n);
  /// Disjoint union of categories.
  static HomCountMatrix blockDiagonal(const HomCountMatrix& a, const HomCountMatrix& b);

  std::size_t size() const { return rows_.size(); }
  const Integer& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

  bool operator==(const HomCountMatrix&) const = default;

private:
  std::vector<std::vector<Integer>> rows_;
};

/// First line n, then n rows of n nonnegative integers; '#' comments.
HomCountMatrix parseHomCounts(std::string_view text);
std::string serializeHomCounts(const HomCountMatrix& a);

/// f(t) = 1^T (I - t(A - I))^{-1} 1 in lowest terms.
RationalFunction seriesFunction(const HomCountMatrix& a);

/// 1^T (A - I)^k 1 for k = 0..maxK: chains of k composable non-identity
/// morphisms.
std::vector<Integer> chainCounts(const HomCountMatrix& a, unsigned maxK);

/// f(-1), or empty when f has a pole at -1.
std::optional<Rational> chiSeries(const HomCountMatrix& a);

/// Laurent coefficients of f about t = -1, from the pole order up to
/// `order`.
TaylorCoefficients<Rational> chiLaurent(const HomCountMatrix& a, unsigned order);

/// Sum of the entries of A^{-1}, or empty when A is singular.
std::optional<Rational> inverseEntrySum(const HomCountMatrix& a);

/// Fraction-free determinant over Q[t].
RatPoly bareissDeterminant(std::vector<std::vector<RatPoly>> m);

} // namespace eulertower::fincat
