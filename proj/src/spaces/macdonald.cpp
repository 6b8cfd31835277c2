// SPDX-License-Identifier: Apache-2.0
#include "eulertower/spaces/macdonald.hpp"

#include "eulertower/error.hpp"
#include "eulertower/polycore/series.hpp"

namespace eulertower::spaces {

namespace {

using Series = TruncatedSeries<IntPoly>;

// 1 + sign * z^j t as a series in t over Z[z].
Series linearFactor(long j, long sign, unsigned order) {
  return Series(order, {IntPoly(Integer(1)), IntPoly::monomial(j, Integer(sign))});
}

std::vector<IntPoly> coefficientsOf(const Series& s) {
  return {s.coefficients().begin(), s.coefficients().end()};
}

long exponentOf(const Integer& b, long sign) {
  require(b.fits_slong_p(), "Betti number too large for a series exponent");
  return sign * b.get_si();
}

} // namespace

std::vector<IntPoly> macdonaldSym(const BettiVector& b, unsigned order) {
  Series product(order, {IntPoly(Integer(1))});
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (sgn(b[j]) == 0) continue;
    long sign = j % 2 == 1 ? 1 : -1;
    product = product * linearFactor(static_cast<long>(j), -1, order).pow(exponentOf(b[j], sign));
  }
  return coefficientsOf(product);
}

std::vector<IntPoly> macdonaldSymUnsigned(const BettiVector& b, unsigned order) {
  Series product(order, {IntPoly(Integer(1))});
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (sgn(b[j]) == 0) continue;
    if (j % 2 == 1)
      product = product * linearFactor(static_cast<long>(j), 1, order).pow(exponentOf(b[j], 1));
    else
      product = product * linearFactor(static_cast<long>(j), -1, order).pow(exponentOf(b[j], -1));
  }
  return coefficientsOf(product);
}

IntPoly twistSign(const IntPoly& p) {
  IntPoly out;
  for (const auto& [e, c] : p.terms()) out.set(e, e % 2 == 0 ? c : Integer(-c));
  return out;
}

BettiVector bettiFromSigned(const IntPoly& signedPoincare) {
  return BettiVector::fromPoincare(twistSign(signedPoincare));
}

EulerSymReport eulerSymGenfun(const BettiVector& b, unsigned order) {
  EulerSymReport report;
  for (const auto& p : macdonaldSym(b, order)) report.fromProduct.push_back(p.evaluate(Integer(1)));
  long euler = exponentOf(chi(b, 0), 1);
  auto base = TruncatedSeries<Integer>(order, {Integer(1), Integer(-1)}).pow(-euler);
  report.fromClosedForm.assign(base.coefficients().begin(), base.coefficients().end());
  report.agree = report.fromProduct == report.fromClosedForm;
  return report;
}

} // namespace eulertower::spaces
