// SPDX-License-Identifier: Apache-2.0
#include "eulertower/polycore/taylor.hpp"

namespace eulertower {

TaylorCoefficients<Rational> reexpand(const IntPoly& p, const Rational& center) {
  return reexpand(toRational(p), center);
}

Integer chiFromBetti(const std::vector<Integer>& betti, unsigned j) {
  Integer total = 0;
  for (std::size_t i = j; i < betti.size(); ++i)
    total += signPower(static_cast<long>(i - j)) * binomial(i, j) * betti[i];
  return total;
}

Integer altChi(const std::vector<Integer>& betti, unsigned j) {
  Integer total = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), i, j);
    Integer sign = (static_cast<long>(i) - static_cast<long>(j)) % 2 == 0 ? 1 : -1;
    total += sign * power * betti[i];
  }
  return total;
}

std::vector<Integer> chiSequence(const std::vector<Integer>& betti, unsigned maxJ) {
  return expandAtMinusOne(IntPoly::fromDense(betti), maxJ);
}

} // namespace eulertower
