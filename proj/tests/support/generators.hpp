// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eulertower/chain/complex.hpp"
#include "eulertower/fincat/fincat.hpp"
#include "eulertower/k0/k0.hpp"
#include "eulertower/motivic/variety.hpp"
#include "eulertower/spaces/betti.hpp"
#include "eulertower/spaces/space_expr.hpp"

namespace gen {

using namespace eulertower;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }

private:
  std::mt19937_64 engine_;
};

inline std::vector<Integer> bettiValues(Rng& rng, long maxLength, long maxEntry) {
  std::vector<Integer> b(static_cast<std::size_t>(rng.uniform(1, maxLength)));
  for (auto& x : b) x = rng.uniform(0, maxEntry);
  return b;
}

inline spaces::BettiVector betti(Rng& rng, long maxLength, long maxEntry) {
  return spaces::BettiVector(bettiValues(rng, maxLength, maxEntry));
}

/// b_i = b_{dim-i} for odd dim.
inline spaces::BettiVector dualBetti(Rng& rng, long maxDimension, long maxEntry) {
  long dim = 2 * rng.uniform(0, (maxDimension - 1) / 2) + 1;
  std::vector<Integer> b(static_cast<std::size_t>(dim + 1));
  for (long i = 0; i <= dim / 2; ++i) {
    Integer v = rng.uniform(0, maxEntry);
    b[static_cast<std::size_t>(i)] = v;
    b[static_cast<std::size_t>(dim - i)] = v;
  }
  b[0] = std::max<long>(1, b[0].get_si());
  b[static_cast<std::size_t>(dim)] = b[0];
  return spaces::BettiVector(std::move(b));
}

template <class R>
LaurentPolynomial<R> polynomial(Rng& rng, long low, long high, long range) {
  LaurentPolynomial<R> p;
  for (long e = low; e <= high; ++e)
    if (rng.uniform(0, 2) > 0) p.set(e, R(rng.uniform(-range, range)));
  return p;
}

inline Rational rational(Rng& rng, long range) {
  Rational q(rng.uniform(-range, range), rng.uniform(1, range));
  q.canonicalize();
  return q;
}

inline chain::IntegerMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long range) {
  chain::IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(-range, range);
  return m;
}

/// A random unimodular matrix and its inverse, as products of elementary
/// row operations.
inline std::pair<chain::IntegerMatrix, chain::IntegerMatrix> unimodular(Rng& rng, std::size_t n) {
  auto p = chain::IntegerMatrix::identity(n);
  auto inv = chain::IntegerMatrix::identity(n);
  if (n < 2) return {p, inv};
  for (int step = 0; step < 4; ++step) {
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long k = rng.uniform(-2, 2);
    auto e = chain::IntegerMatrix::identity(n);
    auto einv = chain::IntegerMatrix::identity(n);
    e(i, j) = k;
    einv(i, j) = -k;
    p = e * p;
    inv = inv * einv;
  }
  return {p, inv};
}

/// Random complex in degrees 0..top: a sum of free pieces and two-term
/// pieces Z --m--> Z, conjugated by unimodular changes of basis, so d^2 = 0
/// holds by construction.
inline chain::ChainComplex complex(Rng& rng, long maxRank, long top) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
  std::map<long, chain::IntegerMatrix> diffs;
  struct Piece {
    long degree;
    bool twoTerm;
    long multiplier;
  };
  std::vector<Piece> pieces;
  for (long d = 0; d <= top; ++d) {
    long budget = rng.uniform(0, maxRank) - static_cast<long>(ranks[static_cast<std::size_t>(d)]);
    for (long i = 0; i < budget; ++i) {
      bool two = d < top && rng.coin() &&
                 ranks[static_cast<std::size_t>(d + 1)] < static_cast<std::size_t>(maxRank);
      pieces.push_back({d, two, rng.uniform(1, 3) * (rng.coin() ? 1 : -1)});
      ++ranks[static_cast<std::size_t>(d)];
      if (two) ++ranks[static_cast<std::size_t>(d + 1)];
    }
  }
  std::vector<std::size_t> used(ranks.size(), 0);
  for (long d = 1; d <= top; ++d)
    diffs.emplace(d, chain::IntegerMatrix(ranks[static_cast<std::size_t>(d - 1)],
                                          ranks[static_cast<std::size_t>(d)]));
  for (const auto& piece : pieces) {
    std::size_t low = used[static_cast<std::size_t>(piece.degree)]++;
    if (!piece.twoTerm) continue;
    std::size_t high = used[static_cast<std::size_t>(piece.degree + 1)]++;
    diffs.at(piece.degree + 1)(low, high) = piece.multiplier;
  }
  std::vector<std::pair<chain::IntegerMatrix, chain::IntegerMatrix>> bases;
  for (auto r : ranks) bases.push_back(unimodular(rng, r));
  for (auto& [d, m] : diffs)
    m = bases[static_cast<std::size_t>(d - 1)].first * m * bases[static_cast<std::size_t>(d)].second;
  return chain::ChainComplex(0, top, ranks, diffs);
}

inline spaces::SpaceExpr spaceAtom(Rng& rng) {
  switch (rng.uniform(0, 4)) {
  case 0: return spaces::SpaceExpr::point();
  case 1: return spaces::SpaceExpr::sphere(static_cast<unsigned>(rng.uniform(0, 5)));
  case 2: return spaces::SpaceExpr::torus(static_cast<unsigned>(rng.uniform(0, 3)));
  case 3: return spaces::SpaceExpr::surface(static_cast<unsigned>(rng.uniform(0, 3)));
  default: return spaces::SpaceExpr::complexProjective(static_cast<unsigned>(rng.uniform(0, 3)));
  }
}

inline spaces::SpaceExpr spaceExpr(Rng& rng, int depth) {
  if (depth == 0 || rng.uniform(0, 2) == 0) return spaceAtom(rng);
  auto a = spaceExpr(rng, depth - 1);
  auto b = spaceExpr(rng, depth - 1);
  return rng.coin() ? a * b : a + b;
}

inline motivic::VarietyExpr varietyAtom(Rng& rng) {
  using V = motivic::VarietyExpr;
  switch (rng.uniform(0, 5)) {
  case 0: return V::point();
  case 1: return V::affine(static_cast<unsigned>(rng.uniform(0, 3)));
  case 2: return V::projective(static_cast<unsigned>(rng.uniform(0, 3)));
  case 3: return V::torus();
  case 4: return V::curve(static_cast<unsigned>(rng.uniform(0, 3)));
  default: return V::lefschetz();
  }
}

/// `curves` false keeps to the Lefschetz subring; `differences` false keeps
/// expressions effective.
inline motivic::VarietyExpr varietyExpr(Rng& rng, int depth, bool curves = true,
                                        bool differences = true) {
  if (depth == 0 || rng.uniform(0, 2) == 0) {
    auto atom = varietyAtom(rng);
    while ((!curves && atom.involvesCurves()) ||
           (!differences && atom.kind() == motivic::VarietyExpr::Kind::Torus))
      atom = varietyAtom(rng);
    return atom;
  }
  auto a = varietyExpr(rng, depth - 1, curves, differences);
  auto b = varietyExpr(rng, depth - 1, curves, differences);
  switch (rng.uniform(0, differences ? 2 : 1)) {
  case 0: return a * b;
  case 1: return a + b;
  default: return a - b;
  }
}

inline k0::K0Element k0Element(Rng& rng) {
  static const char* names[] = {"a", "b", "c"};
  k0::K0Element e;
  for (int i = 0; i < 3; ++i) {
    long c = rng.uniform(-2, 2);
    if (c == 0) continue;
    k0::K0Element term(c);
    for (auto* n : names)
      if (rng.uniform(0, 2) == 0) term = term * k0::K0Element::generator(n);
    e += term;
  }
  return e;
}

inline k0::K0Complex k0Complex(Rng& rng, long low, long high) {
  std::map<long, k0::K0Element> classes;
  for (long d = low; d <= high; ++d) classes[d] = k0Element(rng);
  return k0::K0Complex(std::move(classes));
}

inline fincat::HomCountMatrix homCounts(Rng& rng, long maxObjects, long maxCount) {
  std::size_t n = static_cast<std::size_t>(rng.uniform(1, maxObjects));
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = rng.uniform(i == j ? 1 : 0, maxCount);
  return fincat::HomCountMatrix(std::move(rows));
}

} // namespace gen
