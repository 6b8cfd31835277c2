// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eulertower/polycore/laurent.hpp"
#include "eulertower/polycore/taylor.hpp"

namespace eulertower {

/// Sparse structured form: [[exponent, "coefficient"], ...], exponent-ascending.
template <CoefficientRing R>
nlohmann::json polynomialToJson(const LaurentPolynomial<R>& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, ringToString(c)});
  return out;
}

/// Inverse of polynomialToJson for integer and rational coefficients.
IntPoly intPolyFromJson(const nlohmann::json& j);

/// "chi_3", "chi_{-1}".
std::string indexedName(const std::string& stem, long index);

/// "chi_0 = a, chi_1 = b, ..." over the listed range.
template <CoefficientRing R>
std::string formatIndexed(const std::string& stem, long first, const std::vector<R>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += indexedName(stem, first + static_cast<long>(i)) + " = " + ringToString(values[i]);
  }
  return out;
}

template <CoefficientRing R>
nlohmann::json taylorToJson(const TaylorCoefficients<R>& t) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : t.coeffs) coeffs.push_back(ringToString(c));
  return {{"center", ringToString(t.center)}, {"min_degree", t.minDegree}, {"coefficients", coeffs}};
}

} // namespace eulertower
