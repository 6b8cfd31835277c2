// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulertower/polycore/laurent.hpp"
#include "eulertower/polycore/ring.hpp"

namespace eulertower {

/// Monomial in named generators: generator -> positive exponent, ordered by
/// name. The empty monomial is the ring unit.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(const std::string& generator, unsigned exponent = 1);

  const std::map<std::string, unsigned>& powers() const { return powers_; }
  unsigned degree() const;
  unsigned exponentOf(const std::string& generator) const;
  bool isUnit() const { return powers_.empty(); }

  Monomial operator*(const Monomial& o) const;
  Monomial without(const std::string& generator) const;

  bool operator==(const Monomial& o) const { return powers_ == o.powers_; }
  /// Graded order: total degree first, then the sorted multiset of
  /// generator names.
  bool operator<(const Monomial& o) const;

  std::string toString() const;

private:
  std::map<std::string, unsigned> powers_;
};

/// Integer polynomial in named generators, equivalently an element of the
/// free commutative ring on those symbols. Canonical form: no zero
/// coefficients, monomials in graded order.
class SymbolicPolynomial {
public:
  using Terms = std::map<Monomial, Integer>;

  SymbolicPolynomial() = default;
  SymbolicPolynomial(const Integer& constant);
  SymbolicPolynomial(long constant) : SymbolicPolynomial(Integer(constant)) {}

  static SymbolicPolynomial generator(const std::string& name);
  static SymbolicPolynomial term(const Monomial& m, const Integer& c);

  /// Parses `3*g1*g2 - 2*g3 + 1`; `g^2` is accepted as shorthand for `g*g`.
  static SymbolicPolynomial parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;
  std::vector<std::string> generators() const;

  void addTo(const Monomial& m, const Integer& c);

  SymbolicPolynomial operator-() const;
  SymbolicPolynomial& operator+=(const SymbolicPolynomial& o);
  SymbolicPolynomial& operator-=(const SymbolicPolynomial& o);
  friend SymbolicPolynomial operator+(SymbolicPolynomial a, const SymbolicPolynomial& b) {
    a += b;
    return a;
  }
  friend SymbolicPolynomial operator-(SymbolicPolynomial a, const SymbolicPolynomial& b) {
    a -= b;
    return a;
  }
  friend SymbolicPolynomial operator*(const SymbolicPolynomial& a,
                                      const SymbolicPolynomial& b);
  SymbolicPolynomial pow(unsigned n) const;

  /// Ring homomorphism to Z given a value per generator; throws InputError
  /// naming the first unassigned generator.
  Integer evaluate(const std::map<std::string, Integer>& values) const;

  /// Replaces every listed generator by a polynomial.
  SymbolicPolynomial substitute(
      const std::map<std::string, SymbolicPolynomial>& images) const;

  /// Univariate integer polynomial; throws if any other generator occurs.
  IntPoly toUnivariate(const std::string& var) const;
  static SymbolicPolynomial fromUnivariate(const IntPoly& p, const std::string& var);

  bool operator==(const SymbolicPolynomial& o) const { return terms_ == o.terms_; }

  std::string toString() const;

private:
  Terms terms_;
};

template <>
struct RingTraits<SymbolicPolynomial> {
  static SymbolicPolynomial zero() { return {}; }
  static SymbolicPolynomial one() { return SymbolicPolynomial(1); }
  static bool isZero(const SymbolicPolynomial& a) { return a.isZero(); }
  static std::optional<SymbolicPolynomial> unitInverse(const SymbolicPolynomial& a) {
    if (a == one() || a == SymbolicPolynomial(-1)) return a;
    return std::nullopt;
  }
  static std::string toString(const SymbolicPolynomial& a) { return a.toString(); }
};

/// View as a univariate polynomial in `var` with coefficients in the
/// remaining generators.
LaurentPolynomial<SymbolicPolynomial> collect(const SymbolicPolynomial& p, const std::string& var);

/// Inverse of collect.
SymbolicPolynomial uncollect(const LaurentPolynomial<SymbolicPolynomial>& p, const std::string& var);

} // namespace eulertower
