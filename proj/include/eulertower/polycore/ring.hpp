// SPDX-License-Identifier: Apache-2.0
#pragma once

// Coefficient rings. A ring is any value type with +, -, *, unary -, == and a
// RingTraits specialization supplying the identities and canonical printing.

#include <concepts>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace eulertower {

using Integer = mpz_class;
using Rational = mpq_class;

template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static bool isZero(const Integer& a) { return sgn(a) == 0; }
  static std::optional<Integer> unitInverse(const Integer& a) {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }
  static std::string toString(const Integer& a) { return a.get_str(); }
};

template <>
struct RingTraits<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool isZero(const Rational& a) { return sgn(a) == 0; }
  static std::optional<Rational> unitInverse(const Rational& a) {
    if (sgn(a) == 0) return std::nullopt;
    return Rational(1 / a);
  }
  // p/q reduced; integers without the denominator.
  static std::string toString(const Rational& a) { return a.get_str(); }
};

template <class R>
concept CoefficientRing = std::copyable<R> && requires(const R& a, const R& b) {
  { RingTraits<R>::zero() } -> std::convertible_to<R>;
  { RingTraits<R>::one() } -> std::convertible_to<R>;
  { RingTraits<R>::isZero(a) } -> std::convertible_to<bool>;
  { RingTraits<R>::unitInverse(a) } -> std::convertible_to<std::optional<R>>;
  { RingTraits<R>::toString(a) } -> std::convertible_to<std::string>;
  { R(a + b) };
  { R(a - b) };
  { R(a * b) };
  { R(-a) };
  { a == b } -> std::convertible_to<bool>;
};

template <CoefficientRing R>
R ringZero() {
  return RingTraits<R>::zero();
}

template <CoefficientRing R>
R ringOne() {
  return RingTraits<R>::one();
}

template <CoefficientRing R>
bool isZero(const R& a) {
  return RingTraits<R>::isZero(a);
}

template <CoefficientRing R>
std::string ringToString(const R& a) {
  return RingTraits<R>::toString(a);
}

/// Image of an integer under the unique ring map Z -> R.
template <CoefficientRing R>
R fromInteger(const Integer& n) {
  if constexpr (std::constructible_from<R, Integer>) {
    return R(n);
  } else {
    R out = ringZero<R>();
    R unit = sgn(n) < 0 ? R(-ringOne<R>()) : ringOne<R>();
    Integer count = abs(n);
    // Double-and-add keeps this logarithmic in |n|.
    R acc = unit;
    while (sgn(count) > 0) {
      if (mpz_odd_p(count.get_mpz_t())) out = R(out + acc);
      acc = R(acc + acc);
      count >>= 1;
    }
    return out;
  }
}

template <CoefficientRing R>
R scale(const Integer& n, const R& a) {
  return R(fromInteger<R>(n) * a);
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// C(n, k) for any integer n via the falling-factorial formula; C(n, k) = 0
/// for k < 0.
inline Integer binomial(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

inline Integer signPower(long exponent) {
  return (exponent % 2 == 0) ? Integer(1) : Integer(-1);
}

} // namespace eulertower
