// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "eulertower/motivic/variety.hpp"
#include "eulertower/polycore/laurent.hpp"
#include "eulertower/polycore/symbolic.hpp"

namespace eulertower::motivic {

/// Hodge characteristic sum h^{p,q} u^p v^q, a polynomial in `u` and `v`.
SymbolicPolynomial measureHodge(const VarietyExpr& e);

/// measureHodge(e) evaluated at u = v = t.
IntPoly measurePoincare(const VarietyExpr& e);

/// measureHodge(e) evaluated at u = v = -1.
Integer measureChiC(const VarietyExpr& e);

/// Point count as a polynomial in q with L -> q. Throws InputError for
/// curves of positive genus.
IntPoly pointCount(const VarietyExpr& e);

/// chi^H_j in Z[u]: the coefficients of measureHodge(e), as a polynomial in
/// v, expanded about v = u.
std::vector<IntPoly> hodgeHigher(const VarietyExpr& e);

enum class Measure { Poincare, Count };

/// mu_j(e), the coefficient of t^j (or q^j) in a univariate measure.
std::vector<Integer> higherMeasureCoefficients(const VarietyExpr& e, Measure measure);

} // namespace eulertower::motivic
