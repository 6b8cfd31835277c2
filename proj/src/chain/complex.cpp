// SPDX-License-Identifier: Apache-2.0
#include "eulertower/chain/complex.hpp"

#include <string>

#include "eulertower/chain/smith.hpp"
#include "eulertower/error.hpp"
#include "eulertower/polycore/rational_function.hpp"
#include "eulertower/polycore/taylor.hpp"

namespace eulertower::chain {

ChainComplex::ChainComplex() : ChainComplex(0, 0, {0}) {}

ChainComplex::ChainComplex(long low, long high, std::vector<std::size_t> ranks,
                           std::map<long, IntegerMatrix> differentials)
    : low_(low), high_(high), ranks_(std::move(ranks)) {
  if (high < low) throw InputError("degree range is empty");
  if (ranks_.size() != static_cast<std::size_t>(high - low + 1))
    throw InputError("expected " + std::to_string(high - low + 1) + " ranks, got " +
                     std::to_string(ranks_.size()));
  for (auto& [degree, matrix] : differentials) {
    if (degree <= low || degree > high)
      throw InputError("differential d_" + std::to_string(degree) + " outside the degree range");
    if (matrix.rows() != rank(degree - 1) || matrix.cols() != rank(degree))
      throw InputError("differential d_" + std::to_string(degree) + " has shape " +
                       std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                       ", expected " + std::to_string(rank(degree - 1)) + "x" +
                       std::to_string(rank(degree)));
    if (!matrix.isZero() && !matrix.empty()) diffs_.emplace(degree, std::move(matrix));
  }
  for (auto it = diffs_.begin(); it != diffs_.end(); ++it) {
    auto next = diffs_.find(it->first + 1);
    if (next == diffs_.end()) continue;
    if (!(it->second * next->second).isZero())
      throw InputError("d_" + std::to_string(it->first) + " * d_" + std::to_string(it->first + 1) +
                       " is not zero");
  }
}

ChainComplex ChainComplex::point() { return ChainComplex(0, 0, {1}); }

ChainComplex ChainComplex::withRanks(long low, std::vector<std::size_t> ranks) {
  if (ranks.empty()) return ChainComplex();
  long high = low + static_cast<long>(ranks.size()) - 1;
  return ChainComplex(low, high, std::move(ranks));
}

std::size_t ChainComplex::rank(long degree) const {
  if (degree < low_ || degree > high_) return 0;
  return ranks_[static_cast<std::size_t>(degree - low_)];
}

IntegerMatrix ChainComplex::differential(long degree) const {
  auto it = diffs_.find(degree);
  if (it != diffs_.end()) return it->second;
  return IntegerMatrix(rank(degree - 1), rank(degree));
}

const DegreeHomology& HomologySummary::at(long degree) const {
  for (const auto& d : degrees)
    if (d.degree == degree) return d;
  throw InputError("no homology recorded in degree " + std::to_string(degree));
}

std::vector<std::size_t> HomologySummary::bettiRanks() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

bool HomologySummary::hasTorsion() const {
  for (const auto& d : degrees)
    if (!d.torsion.empty()) return true;
  return false;
}

HomologySummary homology(const ChainComplex& c) {
  std::map<long, SmithForm> forms;
  for (const auto& [degree, matrix] : c.storedDifferentials())
    forms.emplace(degree, smithNormalForm(matrix));
  auto rankOf = [&](long degree) -> std::size_t {
    auto it = forms.find(degree);
    return it == forms.end() ? 0 : it->second.rank;
  };
  HomologySummary out;
  for (long i = c.lowDegree(); i <= c.highDegree(); ++i) {
    DegreeHomology h;
    h.degree = i;
    h.betti = c.rank(i) - rankOf(i) - rankOf(i + 1);
    auto above = forms.find(i + 1);
    if (above != forms.end())
      for (const auto& f : above->second.invariantFactors)
        if (f > 1) h.torsion.push_back(f);
    out.degrees.push_back(std::move(h));
  }
  return out;
}

IntPoly poincare(const ChainComplex& c) {
  IntPoly p;
  for (long i = c.lowDegree(); i <= c.highDegree(); ++i)
    p.set(i, Integer(static_cast<unsigned long>(c.rank(i))));
  return p;
}

IntPoly homologicalPoincare(const ChainComplex& c) {
  IntPoly p;
  for (const auto& d : homology(c).degrees)
    p.set(d.degree, Integer(static_cast<unsigned long>(d.betti)));
  return p;
}

std::vector<Integer> chiOfPoincare(const IntPoly& p, unsigned maxJ) {
  std::vector<Integer> out(maxJ + 1, Integer(0));
  if (p.isZero()) return out;
  if (p.isPolynomial()) {
    auto b = p.dense();
    for (unsigned j = 0; j <= maxJ; ++j) out[j] = chiFromBetti(b, j);
    return out;
  }
  // t^low * Q(t) with low < 0: the point t = -1 is regular, so the
  // expansion starts at u^0 and stays integral.
  long k = -p.lowDegree();
  RationalFunction f(toRational(p.shifted(k)), RatPoly::monomial(k, Rational(1)));
  auto taylor = laurentExpand(f, Rational(-1), maxJ);
  require(taylor.minDegree == 0, "unexpected pole at t = -1");
  for (unsigned j = 0; j <= maxJ; ++j) {
    Rational v = taylor.at(j);
    require(v.get_den() == 1, "non-integral Euler characteristic");
    out[j] = v.get_num();
  }
  return out;
}

std::vector<Integer> chiSequence(const ChainComplex& c, unsigned maxJ) {
  return chiOfPoincare(poincare(c), maxJ);
}

std::vector<Integer> chiHSequence(const ChainComplex& c, unsigned maxJ) {
  return chiOfPoincare(homologicalPoincare(c), maxJ);
}

Integer chiJ(const ChainComplex& c, unsigned j) { return chiSequence(c, j)[j]; }

Integer chiHJ(const ChainComplex& c, unsigned j) { return chiHSequence(c, j)[j]; }

bool isAcyclic(const ChainComplex& c) {
  auto h = homology(c);
  for (const auto& d : h.degrees)
    if (d.betti != 0 || !d.torsion.empty()) return false;
  return true;
}

TauLevel tauLevelOf(const IntPoly& p) {
  if (p.isZero()) return {TauLevel::Kind::Infinite, 0};
  unsigned order = orderAtMinusOne(p);
  if (order == 0) return {TauLevel::Kind::None, 0};
  return {TauLevel::Kind::Finite, order - 1};
}

TauLevel tauLevel(const ChainComplex& c) { return tauLevelOf(poincare(c)); }

} // namespace eulertower::chain
