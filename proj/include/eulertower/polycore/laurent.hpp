// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eulertower/error.hpp"
#include "eulertower/polycore/ring.hpp"

namespace eulertower {

/// Sparse Laurent polynomial sum_e c_e t^e over a coefficient ring.
///
/// Stored coefficients are never zero, so two polynomials are equal exactly
/// when their maps are equal. Ordinary polynomials are the special case of
/// nonnegative support.
template <CoefficientRing R>
class LaurentPolynomial {
public:
  using Coefficient = R;
  using Terms = std::map<long, R>;

  LaurentPolynomial() = default;

  /// Constant polynomial.
  LaurentPolynomial(const R& constant) { set(0, constant); }

  explicit LaurentPolynomial(Terms terms) {
    for (auto& [e, c] : terms) set(e, std::move(c));
  }

  /// Dense coefficients, index i = exponent lowest + i.
  static LaurentPolynomial fromDense(const std::vector<R>& coeffs,
                                     long lowest = 0) {
    LaurentPolynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      p.set(lowest + static_cast<long>(i), coeffs[i]);
    return p;
  }

  static LaurentPolynomial monomial(long exponent, const R& c = ringOne<R>()) {
    LaurentPolynomial p;
    p.set(exponent, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }

  /// Only meaningful for nonzero polynomials.
  long lowDegree() const { return terms_.begin()->first; }
  long highDegree() const { return terms_.rbegin()->first; }

  bool isPolynomial() const { return isZero() || lowDegree() >= 0; }

  R coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? ringZero<R>() : it->second;
  }

  /// Coefficients at exponents 0..highDegree; requires nonnegative support.
  std::vector<R> dense() const {
    if (!isPolynomial())
      throw InputError("dense coefficients need nonnegative support");
    std::vector<R> out;
    if (isZero()) return out;
    out.assign(static_cast<std::size_t>(highDegree()) + 1, ringZero<R>());
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e)] = c;
    return out;
  }

  void set(long exponent, R value) {
    if (eulertower::isZero(value))
      terms_.erase(exponent);
    else
      terms_[exponent] = std::move(value);
  }

  void addTo(long exponent, const R& value) {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      set(exponent, value);
      return;
    }
    it->second = R(it->second + value);
    if (eulertower::isZero(it->second)) terms_.erase(it);
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, R(-c));
    return out;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) addTo(e, c);
    return *this;
  }

  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) addTo(e, R(-c));
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a += b;
    return a;
  }

  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a -= b;
    return a;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.addTo(ea + eb, R(ca * cb));
    return out;
  }

  LaurentPolynomial& operator*=(const LaurentPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  LaurentPolynomial scaled(const R& c) const {
    LaurentPolynomial out;
    for (const auto& [e, v] : terms_) out.set(e, R(v * c));
    return out;
  }

  /// Multiplication by t^n.
  LaurentPolynomial shifted(long n) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + n, c);
    return out;
  }

  /// Substitution t -> 1/t.
  LaurentPolynomial reflected() const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

  /// Negative powers are only defined for monomials with a unit coefficient.
  LaurentPolynomial pow(long n) const {
    if (n < 0) {
      if (termCount() != 1)
        throw InputError("negative power of a non-monomial Laurent polynomial");
      auto inv = RingTraits<R>::unitInverse(terms_.begin()->second);
      if (!inv) throw InputError("negative power of a non-unit monomial");
      return monomial(-lowDegree(), *inv).pow(-n);
    }
    LaurentPolynomial result(ringOne<R>());
    LaurentPolynomial base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// Horner evaluation at a ring element. Requires nonnegative support
  /// unless the point is a unit.
  R evaluate(const R& x) const {
    if (isZero()) return ringZero<R>();
    R value = ringZero<R>();
    long lo = std::min(lowDegree(), 0L);
    R xScale = ringOne<R>();
    if (lo < 0) {
      auto inv = RingTraits<R>::unitInverse(x);
      if (!inv) throw InputError("evaluation of negative powers at a non-unit");
      for (long i = 0; i < -lo; ++i) xScale = R(xScale * *inv);
    }
    for (long e = highDegree(); e >= lo; --e) value = R(value * x + coefficient(e));
    return R(value * xScale);
  }

  bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }

private:
  Terms terms_;
};

using IntPoly = LaurentPolynomial<Integer>;
using RatPoly = LaurentPolynomial<Rational>;

/// Laurent polynomials are themselves a coefficient ring, so nested rings
/// such as Z[u][v] are LaurentPolynomial<LaurentPolynomial<Integer>>.
template <CoefficientRing R>
struct RingTraits<LaurentPolynomial<R>> {
  using P = LaurentPolynomial<R>;
  static P zero() { return P(); }
  static P one() { return P(ringOne<R>()); }
  static bool isZero(const P& a) { return a.isZero(); }
  static std::optional<P> unitInverse(const P& a) {
    if (a.termCount() != 1) return std::nullopt;
    auto inv = RingTraits<R>::unitInverse(a.terms().begin()->second);
    if (!inv) return std::nullopt;
    return P::monomial(-a.lowDegree(), *inv);
  }
  static std::string toString(const P& a);
};

/// Human-readable form, exponent-ascending: "1 + 2*t - t^3". Nested
/// coefficients are parenthesized.
template <CoefficientRing R>
std::string formatPolynomial(const LaurentPolynomial<R>& p,
                             const std::string& var = "t") {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string coeff = ringToString(c);
    bool compound = coeff.find_first_of("+ ", 1) != std::string::npos;
    bool negative = !compound && !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (compound) coeff = "(" + coeff + ")";
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string power;
    if (e == 1)
      power = var;
    else if (e != 0)
      power = var + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    if (power.empty())
      out += coeff;
    else if (coeff == "1")
      out += power;
    else
      out += coeff + "*" + power;
  }
  return out;
}

template <CoefficientRing R>
std::string RingTraits<LaurentPolynomial<R>>::toString(const P& a) {
  return formatPolynomial(a, "t");
}

// Univariate division over a field. Rings without exact inverses of the
// leading coefficient are rejected.
template <CoefficientRing R>
std::pair<LaurentPolynomial<R>, LaurentPolynomial<R>>
divmod(const LaurentPolynomial<R>& a, const LaurentPolynomial<R>& b) {
  if (b.isZero()) throw InputError("polynomial division by zero");
  if (!a.isPolynomial() || !b.isPolynomial())
    throw InputError("polynomial division needs nonnegative support");
  auto leadInv = RingTraits<R>::unitInverse(b.coefficient(b.highDegree()));
  if (!leadInv) throw InputError("leading coefficient is not invertible");
  LaurentPolynomial<R> quotient;
  LaurentPolynomial<R> remainder = a;
  while (!remainder.isZero() && remainder.highDegree() >= b.highDegree()) {
    long shift = remainder.highDegree() - b.highDegree();
    R factor = R(remainder.coefficient(remainder.highDegree()) * *leadInv);
    quotient.addTo(shift, factor);
    remainder -= b.shifted(shift).scaled(factor);
  }
  return {quotient, remainder};
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <CoefficientRing R>
LaurentPolynomial<R> gcd(LaurentPolynomial<R> a, LaurentPolynomial<R> b) {
  while (!b.isZero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.isZero()) return a;
  auto inv = RingTraits<R>::unitInverse(a.coefficient(a.highDegree()));
  if (!inv) throw InputError("gcd needs a field of coefficients");
  return a.scaled(*inv);
}

inline RatPoly toRational(const IntPoly& p) {
  RatPoly out;
  for (const auto& [e, c] : p.terms()) out.set(e, Rational(c));
  return out;
}

} // namespace eulertower
