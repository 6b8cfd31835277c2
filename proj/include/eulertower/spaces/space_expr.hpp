// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "eulertower/polycore/laurent.hpp"
#include "eulertower/spaces/betti.hpp"

namespace eulertower::spaces {

/// Immutable expression over standard spaces: products and disjoint unions
/// of points, spheres, tori, closed orientable surfaces and complex
/// projective spaces.
class SpaceExpr {
public:
  enum class Kind { Point, Sphere, Torus, Surface, ComplexProjective, Product, DisjointUnion };

  static SpaceExpr point();
  static SpaceExpr sphere(unsigned n);
  static SpaceExpr torus(unsigned n);
  static SpaceExpr surface(unsigned genus);
  static SpaceExpr complexProjective(unsigned n);

  friend SpaceExpr operator*(const SpaceExpr& a, const SpaceExpr& b);
  friend SpaceExpr operator+(const SpaceExpr& a, const SpaceExpr& b);

  Kind kind() const;
  unsigned parameter() const;
  const SpaceExpr& left() const;
  const SpaceExpr& right() const;

  /// Re-parseable text with minimal parentheses.
  std::string toString() const;
  bool operator==(const SpaceExpr& o) const;

private:
  struct Node;
  static SpaceExpr leaf(Kind kind, unsigned parameter);
  explicit SpaceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// expr := term ('+' term)* ; term := factor ('*' factor)* ;
/// factor := 'pt' | 'S(n)' | 'T(n)' | 'Sg(g)' | 'CP(n)' | '(' expr ')'
SpaceExpr parseSpaceExpr(std::string_view text);

/// Poincare polynomial: atoms from the standard table, Kunneth for
/// products, sums for disjoint unions.
IntPoly poincareOfExpr(const SpaceExpr& e);
BettiVector bettiOfExpr(const SpaceExpr& e);

} // namespace eulertower::spaces
