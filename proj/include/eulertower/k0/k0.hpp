// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "eulertower/polycore/laurent.hpp"
#include "eulertower/polycore/symbolic.hpp"

namespace eulertower::k0 {

/// A class in the free commutative ring on generator symbols.
using K0Element = SymbolicPolynomial;

/// Bounded complex recorded by the class of each term. Zero classes are not
/// stored.
class K0Complex {
public:
  K0Complex() = default;
  explicit K0Complex(std::map<long, K0Element> classes);

  /// The ring unit in degree 0.
  static K0Complex unit();
  /// A single class in one degree.
  static K0Complex concentrated(long degree, const K0Element& cls);

  const std::map<long, K0Element>& classes() const { return classes_; }
  K0Element at(long degree) const;
  bool isZero() const { return classes_.empty(); }
  std::vector<std::string> generators() const;

  bool operator==(const K0Complex&) const = default;

private:
  std::map<long, K0Element> classes_;
};

/// sum_i [M_i] t^i.
LaurentPolynomial<K0Element> k0Poincare(const K0Complex& m);

/// Coefficient j of k0Poincare(m) expanded about t = -1.
K0Element k0ChiJ(const K0Complex& m, unsigned j);
std::vector<K0Element> k0ChiSequence(const K0Complex& m, unsigned maxJ);

/// Degree n class sum_{i+j=n} [M_i][N_j].
K0Complex k0Tensor(const K0Complex& m, const K0Complex& n);
/// Classes of the cone of any self-map: N_i + N_{i-1}.
K0Complex coneSelf(const K0Complex& n);
K0Complex iteratedCone(const K0Complex& n, unsigned j);
/// M[n]_i = M_{i+n}.
K0Complex k0Shift(const K0Complex& m, long n);
K0Complex k0Sum(const K0Complex& a, const K0Complex& b);

using RankMap = std::map<std::string, Integer>;

/// Applies the ring homomorphism determined by a rank per generator and
/// returns sum_i rank(M_i) t^i. Throws InputError naming the first
/// unassigned generator.
IntPoly specializeRank(const K0Complex& m, const RankMap& ranks);

/// Ranks C(n+k-i-1, k-i) C(n, i) of the degree-i terms of the graded k-th
/// symmetric power of the cone on a free module of rank n, i = 0..k.
std::vector<Integer> adamsRanks(unsigned long n, unsigned long k);

/// chi' of that symmetric power: sum_i (-1)^(i-1) i rank_i. Equals n.
Integer adamsGrayson(unsigned long n, unsigned long k);

} // namespace eulertower::k0
