// SPDX-License-Identifier: Apache-2.0
#include "eulertower/polycore/rational_function.hpp"

#include "eulertower/error.hpp"
#include "eulertower/polycore/series.hpp"

namespace eulertower {

RationalFunction::RationalFunction(const RatPoly& numerator)
    : num_(numerator), den_(Rational(1)) {
  if (!num_.isPolynomial()) throw InputError("rational function numerator has negative powers");
}

RationalFunction::RationalFunction(RatPoly numerator, RatPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.isZero()) throw InputError("rational function with zero denominator");
  // t^-k factors move into the other side.
  if (!num_.isZero() && num_.lowDegree() < 0) {
    long k = -num_.lowDegree();
    num_ = num_.shifted(k);
    den_ = den_.shifted(k);
  }
  if (den_.lowDegree() < 0) {
    long k = -den_.lowDegree();
    num_ = num_.shifted(k);
    den_ = den_.shifted(k);
  }
  if (num_.isZero()) {
    den_ = RatPoly(Rational(1));
    return;
  }
  RatPoly g = gcd(num_, den_);
  num_ = divmod(num_, g).first;
  den_ = divmod(den_, g).first;
  Rational lead = den_.coefficient(den_.highDegree());
  Rational inv = 1 / lead;
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

bool RationalFunction::isPolynomial() const { return den_.termCount() == 1 && den_.highDegree() == 0; }

std::optional<Rational> RationalFunction::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (sgn(d) == 0) return std::nullopt;
  return Rational(num_.evaluate(x) / d);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::toString() const {
  if (isPolynomial()) return formatPolynomial(num_);
  return "(" + formatPolynomial(num_) + ")/(" + formatPolynomial(den_) + ")";
}

TaylorCoefficients<Rational> laurentExpand(const RationalFunction& f, const Rational& center,
                                           unsigned order) {
  // Substitute t = u + center in both parts.
  auto num = reexpand(f.numerator(), center);
  auto den = reexpand(f.denominator(), center);
  std::size_t pole = 0;
  while (sgn(den.coeffs[pole]) == 0) ++pole;
  // g(u) = u^-pole * num(u) / unit(u), unit(0) != 0.
  std::vector<Rational> unit(den.coeffs.begin() + static_cast<long>(pole), den.coeffs.end());
  unsigned span = order + static_cast<unsigned>(pole);
  TruncatedSeries<Rational> quotient =
      TruncatedSeries<Rational>(span, num.coeffs) * TruncatedSeries<Rational>(span, unit).inverse();
  TaylorCoefficients<Rational> out{center, -static_cast<long>(pole), {}};
  out.coeffs = quotient.coefficients();
  return out;
}

} // namespace eulertower
