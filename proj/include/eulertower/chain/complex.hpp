// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "eulertower/chain/matrix.hpp"
#include "eulertower/polycore/laurent.hpp"

namespace eulertower::chain {

/// Bounded complex of free abelian groups, homologically graded: the
/// differential d_i maps C_i to C_{i-1} and has shape rank(i-1) x rank(i).
///
/// Construction checks every shape and d_i * d_{i+1} = 0.
class ChainComplex {
public:
  /// `ranks` lists degrees low..high. Differentials missing from the map are
  /// zero; keys must lie in (low, high].
  ChainComplex(long low, long high, std::vector<std::size_t> ranks,
               std::map<long, IntegerMatrix> differentials = {});

  /// The zero complex (a single zero group in degree 0).
  ChainComplex();
  /// Z in degree 0.
  static ChainComplex point();
  /// Free groups with zero differentials.
  static ChainComplex withRanks(long low, std::vector<std::size_t> ranks);

  long lowDegree() const { return low_; }
  long highDegree() const { return high_; }
  /// Zero outside [low, high].
  std::size_t rank(long degree) const;
  /// d_degree : C_degree -> C_{degree-1}; a zero matrix of the right shape
  /// when no entries were given.
  IntegerMatrix differential(long degree) const;
  const std::map<long, IntegerMatrix>& storedDifferentials() const { return diffs_; }

  bool operator==(const ChainComplex&) const = default;

private:
  long low_;
  long high_;
  std::vector<std::size_t> ranks_;
  // Nonzero entries only.
  std::map<long, IntegerMatrix> diffs_;
};

struct DegreeHomology {
  long degree = 0;
  std::size_t betti = 0;
  /// Invariant factors > 1, forming a divisibility chain.
  std::vector<Integer> torsion;

  bool operator==(const DegreeHomology&) const = default;
};

struct HomologySummary {
  std::vector<DegreeHomology> degrees;

  const DegreeHomology& at(long degree) const;
  std::vector<std::size_t> bettiRanks() const;
  bool hasTorsion() const;
};

HomologySummary homology(const ChainComplex& c);

/// sum_i rank(C_i) t^i.
IntPoly poincare(const ChainComplex& c);
/// sum_i rank(H_i) t^i.
IntPoly homologicalPoincare(const ChainComplex& c);

/// Coefficient j of the expansion of poincare(c) about t = -1.
Integer chiJ(const ChainComplex& c, unsigned j);
/// Coefficient j of the expansion of homologicalPoincare(c) about t = -1.
Integer chiHJ(const ChainComplex& c, unsigned j);

std::vector<Integer> chiSequence(const ChainComplex& c, unsigned maxJ);
std::vector<Integer> chiHSequence(const ChainComplex& c, unsigned maxJ);

/// Higher Euler characteristics of an arbitrary Laurent Poincare polynomial.
/// Nonnegative support uses the binomial sum; otherwise the pole-aware
/// rational expansion.
std::vector<Integer> chiOfPoincare(const IntPoly& p, unsigned maxJ);

bool isAcyclic(const ChainComplex& c);

/// Position of a complex in the filtration by vanishing of chi_0..chi_n.
struct TauLevel {
  enum class Kind {
    None,     // chi_0 != 0
    Finite,   // chi_0..chi_value vanish, chi_{value+1} does not
    Infinite  // every chi_j vanishes (zero Poincare polynomial)
  };
  Kind kind = Kind::None;
  unsigned value = 0;

  bool operator==(const TauLevel&) const = default;
};

TauLevel tauLevel(const ChainComplex& c);
TauLevel tauLevelOf(const IntPoly& poincarePolynomial);

} // namespace eulertower::chain
