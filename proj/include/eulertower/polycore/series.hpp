// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <vector>

#include "eulertower/error.hpp"
#include "eulertower/polycore/laurent.hpp"
#include "eulertower/polycore/ring.hpp"

namespace eulertower {

/// Power series known exactly for exponents 0..order. Every operation
/// returns a series whose order never exceeds what its operands determine.
template <CoefficientRing R>
class TruncatedSeries {
public:
  explicit TruncatedSeries(unsigned order)
      : order_(order), coeffs_(order + 1, ringZero<R>()) {}

  TruncatedSeries(unsigned order, std::vector<R> coeffs) : TruncatedSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  /// Truncation of a polynomial (exact to any order).
  static TruncatedSeries fromPolynomial(const LaurentPolynomial<R>& p, unsigned order) {
    if (!p.isPolynomial()) throw InputError("series from a Laurent polynomial");
    TruncatedSeries s(order);
    for (const auto& [e, c] : p.terms())
      if (e <= static_cast<long>(order)) s.coeffs_[static_cast<std::size_t>(e)] = c;
    return s;
  }

  unsigned order() const { return order_; }
  const std::vector<R>& coefficients() const { return coeffs_; }
  const R& operator[](unsigned i) const { return coeffs_.at(i); }

  LaurentPolynomial<R> toPolynomial() const { return LaurentPolynomial<R>::fromDense(coeffs_); }

  TruncatedSeries truncated(unsigned order) const {
    if (order > order_) throw InputError("cannot extend a truncated series");
    return TruncatedSeries(order, coeffs_);
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order_, b.order_));
    for (unsigned i = 0; i <= out.order_; ++i) out.coeffs_[i] = R(a.coeffs_[i] + b.coeffs_[i]);
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order_, b.order_));
    for (unsigned i = 0; i <= out.order_; ++i) {
      if (eulertower::isZero(a.coeffs_[i])) continue;
      for (unsigned j = 0; i + j <= out.order_; ++j)
        out.coeffs_[i + j] = R(out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    }
    return out;
  }

  /// Multiplicative inverse; the constant term must be a unit of R.
  TruncatedSeries inverse() const {
    auto c0inv = RingTraits<R>::unitInverse(coeffs_[0]);
    if (!c0inv) throw InputError("series inversion needs a unit constant term");
    TruncatedSeries out(order_);
    out.coeffs_[0] = *c0inv;
    for (unsigned n = 1; n <= order_; ++n) {
      R acc = ringZero<R>();
      for (unsigned k = 1; k <= n; ++k) acc = R(acc + coeffs_[k] * out.coeffs_[n - k]);
      out.coeffs_[n] = R(-(acc * *c0inv));
    }
    return out;
  }

  /// Integer power; negative exponents invert first.
  TruncatedSeries pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    TruncatedSeries result(order_);
    result.coeffs_[0] = ringOne<R>();
    TruncatedSeries base = *this;
    while (exponent > 0) {
      if (exponent & 1) result = result * base;
      exponent >>= 1;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

  bool operator==(const TruncatedSeries& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
  }

private:
  unsigned order_;
  std::vector<R> coeffs_;
};

/// (base)^exponent for a polynomial base, as a series to `order`.
template <CoefficientRing R>
TruncatedSeries<R> binomialPower(const LaurentPolynomial<R>& base, long exponent, unsigned order) {
  return TruncatedSeries<R>::fromPolynomial(base, order).pow(exponent);
}

} // namespace eulertower
