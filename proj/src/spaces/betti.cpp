// SPDX-License-Identifier: Apache-2.0
#include "eulertower/spaces/betti.hpp"

#include "eulertower/error.hpp"
#include "eulertower/polycore/taylor.hpp"

namespace eulertower::spaces {

BettiVector::BettiVector(std::vector<Integer> values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (sgn(v) < 0) throw InputError("Betti numbers must be nonnegative");
  while (!values_.empty() && sgn(values_.back()) == 0) values_.pop_back();
}

BettiVector::BettiVector(std::initializer_list<long> values)
    : BettiVector(std::vector<Integer>(values.begin(), values.end())) {}

BettiVector BettiVector::fromPoincare(const IntPoly& p) { return BettiVector(p.dense()); }

std::string BettiVector::toString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? ", " : "") + values_[i].get_str();
  return out + "]";
}

Integer chi(const BettiVector& b, unsigned j) { return chiFromBetti(b.values(), j); }

std::vector<Integer> chiSequence(const BettiVector& b, unsigned maxJ) {
  return eulertower::chiSequence(b.values(), maxJ);
}

unsigned kervaire(const BettiVector& b, long dimension) {
  if (dimension < 0 || dimension % 2 == 0)
    throw InputError("semi-characteristic requires odd dimension");
  if (b.size() > static_cast<std::size_t>(dimension) + 1)
    throw InputError("Betti vector is longer than the dimension allows");
  long n = (dimension - 1) / 2;
  Integer total = 0;
  for (long i = 0; i <= n; ++i) total += signPower(i) * b[static_cast<std::size_t>(i)];
  return mpz_odd_p(total.get_mpz_t()) ? 1u : 0u;
}

unsigned torusOrder(const BettiVector& b) {
  if (b.isZero()) throw InputError("torus order of the zero Betti vector");
  return orderAtMinusOne(b.poincare());
}

} // namespace eulertower::spaces
