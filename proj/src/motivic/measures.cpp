// SPDX-License-Identifier: Apache-2.0
#include "eulertower/motivic/measures.hpp"

#include "eulertower/error.hpp"
#include "eulertower/polycore/taylor.hpp"

namespace eulertower::motivic {

namespace {

using K = VarietyExpr::Kind;

SymbolicPolynomial hodgeAtom(const VarietyExpr& e) {
  const auto u = SymbolicPolynomial::generator("u");
  const auto v = SymbolicPolynomial::generator("v");
  const auto uv = u * v;
  const unsigned n = e.parameter();
  switch (e.kind()) {
  case K::Point: return SymbolicPolynomial(1);
  case K::Lefschetz: return uv;
  case K::Affine: return uv.pow(n);
  case K::Projective: {
    SymbolicPolynomial p;
    for (unsigned i = 0; i <= n; ++i) p += uv.pow(i);
    return p;
  }
  case K::Torus: return uv - SymbolicPolynomial(1);
  case K::Curve: {
    SymbolicPolynomial g(static_cast<long>(n));
    return SymbolicPolynomial(1) + g * u + g * v + uv;
  }
  default: throw InvariantViolation("not an atom");
  }
}

IntPoly countAtom(const VarietyExpr& e) {
  const long n = static_cast<long>(e.parameter());
  switch (e.kind()) {
  case K::Point: return IntPoly(Integer(1));
  case K::Lefschetz: return IntPoly::monomial(1, Integer(1));
  case K::Affine: return IntPoly::monomial(n, Integer(1));
  case K::Projective: {
    IntPoly p;
    for (long i = 0; i <= n; ++i) p.set(i, Integer(1));
    return p;
  }
  case K::Torus: return IntPoly::fromDense({Integer(-1), Integer(1)});
  case K::Curve:
    if (n >= 1) throw InputError("C(" + std::to_string(n) + ") is not in the Lefschetz subring");
    return IntPoly::fromDense({Integer(1), Integer(1)});
  default: throw InvariantViolation("not an atom");
  }
}

template <class T, class Atom>
T evaluateHomomorphism(const VarietyExpr& e, const Atom& atom) {
  if (e.isAtom()) return atom(e);
  T a = evaluateHomomorphism<T>(e.left(), atom);
  T b = evaluateHomomorphism<T>(e.right(), atom);
  switch (e.kind()) {
  case K::Product: return a * b;
  case K::Sum: return a + b;
  case K::Difference: return a - b;
  default: throw InvariantViolation("not an operator");
  }
}

} // namespace

SymbolicPolynomial measureHodge(const VarietyExpr& e) {
  return evaluateHomomorphism<SymbolicPolynomial>(e, hodgeAtom);
}

IntPoly measurePoincare(const VarietyExpr& e) {
  const auto t = SymbolicPolynomial::generator("t");
  return measureHodge(e).substitute({{"u", t}, {"v", t}}).toUnivariate("t");
}

Integer measureChiC(const VarietyExpr& e) {
  return measureHodge(e).evaluate({{"u", Integer(-1)}, {"v", Integer(-1)}});
}

IntPoly pointCount(const VarietyExpr& e) { return evaluateHomomorphism<IntPoly>(e, countAtom); }

std::vector<IntPoly> hodgeHigher(const VarietyExpr& e) {
  auto inV = collect(measureHodge(e), "v");
  if (inV.isZero()) return {IntPoly()};
  auto taylor = reexpand(inV, SymbolicPolynomial::generator("u"));
  std::vector<IntPoly> out;
  for (const auto& c : taylor.coeffs) out.push_back(c.toUnivariate("u"));
  return out;
}

std::vector<Integer> higherMeasureCoefficients(const VarietyExpr& e, Measure measure) {
  IntPoly p = measure == Measure::Poincare ? measurePoincare(e) : pointCount(e);
  if (p.isZero()) return {Integer(0)};
  return p.dense();
}

} // namespace eulertower::motivic
