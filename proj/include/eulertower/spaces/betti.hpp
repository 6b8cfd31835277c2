// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "eulertower/polycore/laurent.hpp"

namespace eulertower::spaces {

/// Rational Betti numbers b_0..b_N with trailing zeros trimmed.
class BettiVector {
public:
  BettiVector() = default;
  explicit BettiVector(std::vector<Integer> values);
  BettiVector(std::initializer_list<long> values);
  /// Reads b_i off a Poincare polynomial with nonnegative coefficients.
  static BettiVector fromPoincare(const IntPoly& p);

  const std::vector<Integer>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool isZero() const { return values_.empty(); }
  /// Zero beyond the stored range.
  Integer operator[](std::size_t i) const { return i < values_.size() ? values_[i] : Integer(0); }

  IntPoly poincare() const { return IntPoly::fromDense(values_); }

  bool operator==(const BettiVector&) const = default;
  /// "[1, 0, 1]"
  std::string toString() const;

private:
  std::vector<Integer> values_;
};

/// chi_j = sum_i (-1)^(i-j) C(i, j) b_i.
Integer chi(const BettiVector& b, unsigned j);
std::vector<Integer> chiSequence(const BettiVector& b, unsigned maxJ);

/// Kervaire semi-characteristic sum_{i<=n} (-1)^i b_i mod 2 for a space of
/// odd dimension 2n + 1. Returns 0 or 1.
unsigned kervaire(const BettiVector& b, long dimension);

/// Order of vanishing of sum b_i t^i at t = -1, i.e. the first j with
/// chi_j != 0. An upper bound for the number of circle factors.
unsigned torusOrder(const BettiVector& b);

} // namespace eulertower::spaces
