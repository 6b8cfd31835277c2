// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "eulertower/polycore/laurent.hpp"
#include "eulertower/polycore/taylor.hpp"

namespace eulertower {

/// Quotient of polynomials over Q in lowest terms with a monic denominator,
/// so equal functions have equal representatives.
class RationalFunction {
public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const RatPoly& numerator);
  RationalFunction(RatPoly numerator, RatPoly denominator);

  const RatPoly& numerator() const { return num_; }
  const RatPoly& denominator() const { return den_; }

  bool isPolynomial() const;
  /// Empty when the denominator vanishes at x.
  std::optional<Rational> evaluate(const Rational& x) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;

  bool operator==(const RationalFunction& o) const = default;
  std::string toString() const;

private:
  RatPoly num_;
  RatPoly den_;
};

/// Expansion about `center` as a Laurent series in u = t - center. The result
/// starts at minDegree = -(pole order) and runs through u^order.
TaylorCoefficients<Rational> laurentExpand(const RationalFunction& f, const Rational& center,
                                           unsigned order);

} // namespace eulertower
