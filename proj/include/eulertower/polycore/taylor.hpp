// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "eulertower/error.hpp"
#include "eulertower/polycore/laurent.hpp"
#include "eulertower/polycore/ring.hpp"
#include "eulertower/polycore/series.hpp"

namespace eulertower {

/// Coefficients of an expansion sum_j coeffs[j - minDegree] (t - center)^j.
template <CoefficientRing R>
struct TaylorCoefficients {
  R center;
  long minDegree = 0;
  std::vector<R> coeffs;

  long maxDegree() const { return minDegree + static_cast<long>(coeffs.size()) - 1; }

  /// Coefficient of (t - center)^j; zero outside the stored range.
  R at(long j) const {
    if (j < minDegree || j > maxDegree()) return ringZero<R>();
    return coeffs[static_cast<std::size_t>(j - minDegree)];
  }

  bool operator==(const TaylorCoefficients&) const = default;
};

/// Re-expansion of an ordinary polynomial about `center` by repeated
/// synthetic division by (t - center). Coefficients a_j satisfy
/// P(t) = sum_j a_j (t - center)^j exactly.
template <CoefficientRing R>
TaylorCoefficients<R> reexpand(const LaurentPolynomial<R>& p, const R& center) {
  if (!p.isPolynomial())
    throw InputError("laurent input requires pole-aware expansion");
  TaylorCoefficients<R> out{center, 0, {}};
  std::vector<R> work = p.dense();
  // Each pass divides the remaining quotient by (t - center); the remainder
  // is the next coefficient.
  while (!work.empty()) {
    for (std::size_t i = work.size() - 1; i > 0; --i)
      work[i - 1] = R(work[i - 1] + center * work[i]);
    out.coeffs.push_back(work.front());
    work.erase(work.begin());
  }
  return out;
}

/// Integer polynomial about a rational centre.
TaylorCoefficients<Rational> reexpand(const IntPoly& p, const Rational& center);

/// Rebuilds the polynomial sum_j a_j (t - center)^j; the inverse of reexpand
/// for nonnegative minDegree.
template <CoefficientRing R>
LaurentPolynomial<R> recompose(const TaylorCoefficients<R>& taylor) {
  if (taylor.minDegree < 0) throw InputError("recompose needs a pole-free expansion");
  LaurentPolynomial<R> linear = LaurentPolynomial<R>::monomial(1) - LaurentPolynomial<R>(taylor.center);
  LaurentPolynomial<R> out;
  LaurentPolynomial<R> power = linear.pow(taylor.minDegree);
  for (const auto& c : taylor.coeffs) {
    out += power.scaled(c);
    power *= linear;
  }
  return out;
}

/// Expansion of a Laurent polynomial about t = -1, coefficients 0..maxJ in
/// u = 1 + t. t = -1 is a unit, so t^(-n) = (-1)^n (1 - u)^(-n) expands with
/// integer coefficients over any ring.
template <CoefficientRing R>
std::vector<R> expandAtMinusOne(const LaurentPolynomial<R>& p, unsigned maxJ) {
  std::vector<R> out(maxJ + 1, ringZero<R>());
  if (p.isZero()) return out;
  long shift = std::min(p.lowDegree(), 0L);
  auto shifted = reexpand(p.shifted(-shift), R(-ringOne<R>()));
  TruncatedSeries<R> body(maxJ, shifted.coeffs);
  if (shift < 0) {
    long n = -shift;
    // (1 - u)^(-n) = sum_k C(n + k - 1, k) u^k.
    std::vector<R> factor(maxJ + 1, ringZero<R>());
    for (unsigned k = 0; k <= maxJ; ++k)
      factor[k] = fromInteger<R>(Integer(signPower(n) * binomial(static_cast<unsigned long>(n + k - 1), k)));
    body = body * TruncatedSeries<R>(maxJ, factor);
  }
  for (unsigned j = 0; j <= maxJ; ++j) out[j] = body[j];
  return out;
}

/// Order of vanishing at t = -1 of a nonzero Laurent polynomial.
template <CoefficientRing R>
unsigned orderAtMinusOne(const LaurentPolynomial<R>& p) {
  if (p.isZero()) throw InputError("order of vanishing of the zero polynomial");
  long shift = std::min(p.lowDegree(), 0L);
  auto taylor = reexpand(p.shifted(-shift), R(-ringOne<R>()));
  unsigned j = 0;
  while (eulertower::isZero(taylor.coeffs[j])) ++j;
  return j;
}

/// sum_i (-1)^(i-j) C(i, j) b_i.
Integer chiFromBetti(const std::vector<Integer>& betti, unsigned j);

/// sum_i (-1)^(i-j) i^j b_i with 0^0 = 1.
Integer altChi(const std::vector<Integer>& betti, unsigned j);

/// chiFromBetti for j = 0..maxJ at once, via the Taylor shift.
std::vector<Integer> chiSequence(const std::vector<Integer>& betti, unsigned maxJ);

template <CoefficientRing R>
TruncatedSeries<R> binomialPower(const TruncatedSeries<R>& base, long exponent) {
  return base.pow(exponent);
}

} // namespace eulertower
