// SPDX-License-Identifier: Apache-2.0
#include "eulertower/chain/constructions.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "eulertower/error.hpp"

namespace eulertower::chain {

namespace {

// Complexes the library builds itself must come out valid; a failure here is
// a bug, not bad input.
ChainComplex assemble(long low, long high, std::vector<std::size_t> ranks,
                      std::map<long, IntegerMatrix> diffs, const char* what) {
  try {
    return ChainComplex(low, high, std::move(ranks), std::move(diffs));
  } catch (const InputError& e) {
    throw InvariantViolation(std::string(what) + " produced an invalid complex: " + e.what());
  }
}

std::vector<std::size_t> ranksOver(long low, long high, auto&& rankAt) {
  std::vector<std::size_t> out;
  for (long i = low; i <= high; ++i) out.push_back(rankAt(i));
  return out;
}

} // namespace

ChainMap ChainMap::identity(const ChainComplex& c) { return scalar(c, 1); }

ChainMap ChainMap::scalar(const ChainComplex& c, const Integer& k) {
  ChainMap f{c, c, {}};
  for (long i = c.lowDegree(); i <= c.highDegree(); ++i)
    if (c.rank(i) > 0) f.components.emplace(i, IntegerMatrix::identity(c.rank(i)).scaled(k));
  return f;
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  return ChainMap{source, target, {}};
}

IntegerMatrix ChainMap::component(long degree) const {
  auto it = components.find(degree);
  if (it != components.end()) return it->second;
  return IntegerMatrix(target.rank(degree), source.rank(degree));
}

void ChainMap::checkCommutes() const {
  for (const auto& [degree, m] : components)
    if (m.rows() != target.rank(degree) || m.cols() != source.rank(degree))
      throw InputError("chain map component f_" + std::to_string(degree) + " has the wrong shape");
  long low = std::min(source.lowDegree(), target.lowDegree());
  long high = std::max(source.highDegree(), target.highDegree());
  for (long i = low; i <= high + 1; ++i) {
    IntegerMatrix lhs = target.differential(i) * component(i);
    IntegerMatrix rhs = component(i - 1) * source.differential(i);
    if (!(lhs == rhs)) throw InputError("not a chain map: d f != f d in degree " + std::to_string(i));
  }
}

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  long low = a.lowDegree() + b.lowDegree();
  long high = a.highDegree() + b.highDegree();
  // offset[n][i] = position of the A_i (x) B_{n-i} block inside degree n.
  auto blockOffset = [&](long n, long i) {
    std::size_t off = 0;
    for (long p = a.lowDegree(); p < i; ++p) off += a.rank(p) * b.rank(n - p);
    return off;
  };
  auto rankAt = [&](long n) {
    std::size_t r = 0;
    for (long i = a.lowDegree(); i <= a.highDegree(); ++i) r += a.rank(i) * b.rank(n - i);
    return r;
  };
  std::vector<std::size_t> ranks = ranksOver(low, high, rankAt);
  std::map<long, IntegerMatrix> diffs;
  for (long n = low + 1; n <= high; ++n) {
    IntegerMatrix d(rankAt(n - 1), rankAt(n));
    for (long i = a.lowDegree(); i <= a.highDegree(); ++i) {
      long j = n - i;
      if (a.rank(i) == 0 || b.rank(j) == 0) continue;
      std::size_t col = blockOffset(n, i);
      if (a.rank(i - 1) > 0) {
        IntegerMatrix part = kronecker(a.differential(i), IntegerMatrix::identity(b.rank(j)));
        d.place(part, blockOffset(n - 1, i - 1), col);
      }
      if (b.rank(j - 1) > 0) {
        IntegerMatrix part = kronecker(IntegerMatrix::identity(a.rank(i)), b.differential(j));
        if (i % 2 != 0) part = part.scaled(-1);
        d.place(part, blockOffset(n - 1, i), col);
      }
    }
    diffs.emplace(n, std::move(d));
  }
  return assemble(low, high, std::move(ranks), std::move(diffs), "tensor product");
}

ChainComplex cone(const ChainMap& f) {
  f.checkCommutes();
  const ChainComplex& a = f.source;
  const ChainComplex& b = f.target;
  long low = std::min(b.lowDegree(), a.lowDegree() + 1);
  long high = std::max(b.highDegree(), a.highDegree() + 1);
  auto rankAt = [&](long i) { return b.rank(i) + a.rank(i - 1); };
  std::vector<std::size_t> ranks = ranksOver(low, high, rankAt);
  std::map<long, IntegerMatrix> diffs;
  for (long i = low + 1; i <= high; ++i) {
    IntegerMatrix d(rankAt(i - 1), rankAt(i));
    d.place(b.differential(i), 0, 0);
    d.place(f.component(i - 1), 0, b.rank(i));
    d.place(a.differential(i - 1).scaled(-1), b.rank(i - 1), b.rank(i));
    diffs.emplace(i, std::move(d));
  }
  return assemble(low, high, std::move(ranks), std::move(diffs), "mapping cone");
}

ChainComplex iteratedCone(const ChainComplex& n, unsigned j, const Integer& k) {
  ChainComplex out = n;
  for (unsigned step = 0; step < j; ++step) out = cone(ChainMap::scalar(out, k));
  return out;
}

ChainComplex shift(const ChainComplex& c, long n) {
  std::vector<std::size_t> ranks;
  for (long i = c.lowDegree(); i <= c.highDegree(); ++i) ranks.push_back(c.rank(i));
  std::map<long, IntegerMatrix> diffs;
  for (const auto& [degree, m] : c.storedDifferentials())
    diffs.emplace(degree - n, n % 2 == 0 ? m : m.scaled(-1));
  return assemble(c.lowDegree() - n, c.highDegree() - n, std::move(ranks), std::move(diffs),
                  "shift");
}

ChainComplex directSum(const ChainComplex& a, const ChainComplex& b) {
  long low = std::min(a.lowDegree(), b.lowDegree());
  long high = std::max(a.highDegree(), b.highDegree());
  auto rankAt = [&](long i) { return a.rank(i) + b.rank(i); };
  std::vector<std::size_t> ranks = ranksOver(low, high, rankAt);
  std::map<long, IntegerMatrix> diffs;
  for (long i = low + 1; i <= high; ++i) {
    IntegerMatrix d(rankAt(i - 1), rankAt(i));
    d.place(a.differential(i), 0, 0);
    d.place(b.differential(i), a.rank(i - 1), a.rank(i));
    diffs.emplace(i, std::move(d));
  }
  return assemble(low, high, std::move(ranks), std::move(diffs), "direct sum");
}

} // namespace eulertower::chain
