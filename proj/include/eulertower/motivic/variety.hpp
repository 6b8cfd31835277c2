// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace eulertower::motivic {

/// Expression for a class in the Grothendieck ring of varieties. Differences
/// are formal.
class VarietyExpr {
public:
  enum class Kind { Point, Affine, Projective, Torus, Curve, Lefschetz, Product, Sum, Difference };

  static VarietyExpr point();
  static VarietyExpr affine(unsigned n);
  static VarietyExpr projective(unsigned n);
  static VarietyExpr torus();
  static VarietyExpr curve(unsigned genus);
  static VarietyExpr lefschetz();

  friend VarietyExpr operator*(const VarietyExpr& a, const VarietyExpr& b);
  friend VarietyExpr operator+(const VarietyExpr& a, const VarietyExpr& b);
  friend VarietyExpr operator-(const VarietyExpr& a, const VarietyExpr& b);

  Kind kind() const;
  unsigned parameter() const;
  bool isAtom() const;
  const VarietyExpr& left() const;
  const VarietyExpr& right() const;

  /// True if the expression uses C(g) with g >= 1.
  bool involvesCurves() const;
  /// True if no difference occurs.
  bool isEffective() const;

  /// Re-parseable text.
  std::string toString() const;
  bool operator==(const VarietyExpr& o) const;

private:
  struct Node;
  static VarietyExpr leaf(Kind kind, unsigned parameter);
  static VarietyExpr binary(Kind kind, const VarietyExpr& a, const VarietyExpr& b);
  explicit VarietyExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
/// factor := 'pt' | 'A(n)' | 'P(n)' | 'Gm' | 'C(g)' | 'L' | '(' expr ')'
VarietyExpr parseVarietyExpr(std::string_view text);

} // namespace eulertower::motivic
