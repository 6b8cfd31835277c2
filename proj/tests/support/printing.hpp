// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>

#include "eulertower/polycore/laurent.hpp"
#include "eulertower/polycore/symbolic.hpp"

namespace eulertower {

template <CoefficientRing R>
std::ostream& operator<<(std::ostream& os, const LaurentPolynomial<R>& p) {
  return os << formatPolynomial(p);
}

inline std::ostream& operator<<(std::ostream& os, const SymbolicPolynomial& p) {
  return os << p.toString();
}

} // namespace eulertower
