// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "eulertower/polycore/laurent.hpp"
#include "eulertower/spaces/betti.hpp"

namespace eulertower::spaces {

/// Signed Poincare polynomials sum_i (-1)^i b_i(Sym^r M) z^i for r = 0..order,
/// read off prod_j (1 - z^j t)^((-1)^(j+1) b_j) as a series in t.
std::vector<IntPoly> macdonaldSym(const BettiVector& b, unsigned order);

/// Ordinary Poincare polynomials of Sym^r M from the classical product
/// prod_{j odd} (1 + z^j t)^(b_j) prod_{j even} (1 - z^j t)^(-b_j).
std::vector<IntPoly> macdonaldSymUnsigned(const BettiVector& b, unsigned order);

/// z -> -z.
IntPoly twistSign(const IntPoly& p);

/// b_i = (-1)^i [z^i] of a signed Poincare polynomial.
BettiVector bettiFromSigned(const IntPoly& signedPoincare);

struct EulerSymReport {
  /// Signed polynomial of Sym^r evaluated at z = 1.
  std::vector<Integer> fromProduct;
  /// Coefficients of (1 - t)^(-chi(M)).
  std::vector<Integer> fromClosedForm;
  bool agree = false;
};

EulerSymReport eulerSymGenfun(const BettiVector& b, unsigned order);

} // namespace eulertower::spaces
