// SPDX-License-Identifier: Apache-2.0
#include "eulertower/k0/k0.hpp"

#include <set>

#include "eulertower/polycore/taylor.hpp"

namespace eulertower::k0 {

K0Complex::K0Complex(std::map<long, K0Element> classes) {
  for (auto& [degree, cls] : classes)
    if (!cls.isZero()) classes_.emplace(degree, std::move(cls));
}

K0Complex K0Complex::unit() { return concentrated(0, K0Element(1)); }

K0Complex K0Complex::concentrated(long degree, const K0Element& cls) {
  return K0Complex({{degree, cls}});
}

K0Element K0Complex::at(long degree) const {
  auto it = classes_.find(degree);
  return it == classes_.end() ? K0Element() : it->second;
}

std::vector<std::string> K0Complex::generators() const {
  std::set<std::string> seen;
  for (const auto& [d, cls] : classes_)
    for (const auto& g : cls.generators()) seen.insert(g);
  return {seen.begin(), seen.end()};
}

LaurentPolynomial<K0Element> k0Poincare(const K0Complex& m) {
  LaurentPolynomial<K0Element> p;
  for (const auto& [degree, cls] : m.classes()) p.set(degree, cls);
  return p;
}

std::vector<K0Element> k0ChiSequence(const K0Complex& m, unsigned maxJ) {
  if (m.isZero() || m.classes().begin()->first >= 0) {
    std::vector<K0Element> out(maxJ + 1);
    for (unsigned j = 0; j <= maxJ; ++j)
      for (const auto& [i, cls] : m.classes()) {
        if (static_cast<unsigned long>(i) < j) continue;
        Integer weight = signPower(i - static_cast<long>(j)) *
                         binomial(static_cast<unsigned long>(i), j);
        out[j] += cls * K0Element(weight);
      }
    return out;
  }
  return expandAtMinusOne(k0Poincare(m), maxJ);
}

K0Element k0ChiJ(const K0Complex& m, unsigned j) { return k0ChiSequence(m, j)[j]; }

K0Complex k0Tensor(const K0Complex& m, const K0Complex& n) {
  std::map<long, K0Element> out;
  for (const auto& [i, a] : m.classes())
    for (const auto& [j, b] : n.classes()) out[i + j] += a * b;
  return K0Complex(std::move(out));
}

K0Complex coneSelf(const K0Complex& n) {
  std::map<long, K0Element> out;
  for (const auto& [i, cls] : n.classes()) {
    out[i] += cls;
    out[i + 1] += cls;
  }
  return K0Complex(std::move(out));
}

K0Complex iteratedCone(const K0Complex& n, unsigned j) {
  K0Complex out = n;
  for (unsigned i = 0; i < j; ++i) out = coneSelf(out);
  return out;
}

K0Complex k0Shift(const K0Complex& m, long n) {
  std::map<long, K0Element> out;
  for (const auto& [i, cls] : m.classes()) out.emplace(i - n, cls);
  return K0Complex(std::move(out));
}

K0Complex k0Sum(const K0Complex& a, const K0Complex& b) {
  std::map<long, K0Element> out = a.classes();
  for (const auto& [i, cls] : b.classes()) out[i] += cls;
  return K0Complex(std::move(out));
}

IntPoly specializeRank(const K0Complex& m, const RankMap& ranks) {
  IntPoly p;
  for (const auto& [degree, cls] : m.classes()) p.set(degree, cls.evaluate(ranks));
  return p;
}

std::vector<Integer> adamsRanks(unsigned long n, unsigned long k) {
  std::vector<Integer> ranks;
  for (unsigned long i = 0; i <= k; ++i) {
    // Sym^(k-i) of rank n: multichoose(n, k-i), which is 1 for n = 0 = k-i.
    Integer sym = n + k - i == 0 ? Integer(1) : (n == 0 ? Integer(0) : binomial(n + k - i - 1, k - i));
    ranks.push_back(sym * binomial(n, i));
  }
  return ranks;
}

Integer adamsGrayson(unsigned long n, unsigned long k) {
  return chiFromBetti(adamsRanks(n, k), 1);
}

} // namespace eulertower::k0
