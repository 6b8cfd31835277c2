// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include "eulertower/chain/complex.hpp"

namespace eulertower::chain {

/// Degreewise maps f_i : A_i -> B_i, each of shape rank_B(i) x rank_A(i).
/// Missing degrees are zero maps.
struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::map<long, IntegerMatrix> components;

  static ChainMap identity(const ChainComplex& c);
  static ChainMap scalar(const ChainComplex& c, const Integer& k);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  IntegerMatrix component(long degree) const;
  /// Throws InputError naming the first degree where d f != f d.
  void checkCommutes() const;
};

/// Total complex of A (x) B with d(a (x) b) = da (x) b + (-1)^|a| a (x) db.
/// Within degree n the summands A_i (x) B_{n-i} appear in increasing i, and
/// a_p (x) b_q sits at offset p * rank(B_{n-i}) + q.
ChainComplex tensor(const ChainComplex& a, const ChainComplex& b);

/// Mapping cone: Cone_i = B_i (+) A_{i-1}, d = [[d_B, f], [0, -d_A]].
ChainComplex cone(const ChainMap& f);

/// j-fold cone of k * identity, starting from n.
ChainComplex iteratedCone(const ChainComplex& n, unsigned j, const Integer& k = 1);

/// C[n]_i = C_{i+n} with differentials multiplied by (-1)^n.
ChainComplex shift(const ChainComplex& c, long n);

ChainComplex directSum(const ChainComplex& a, const ChainComplex& b);

} // namespace eulertower::chain
