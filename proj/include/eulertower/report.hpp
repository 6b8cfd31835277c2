// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eulertower/chain/io.hpp"
#include "eulertower/fincat/fincat.hpp"
#include "eulertower/k0/k0.hpp"
#include "eulertower/motivic/variety.hpp"
#include "eulertower/spaces/betti.hpp"
#include "eulertower/spaces/simplicial.hpp"
#include "eulertower/spaces/space_expr.hpp"

namespace eulertower::report {

/// Output of one command: human-readable lines and a structured document
/// carrying at least the same information.
struct Report {
  std::string text;
  nlohmann::json data;

  /// Two-space indented JSON with a trailing newline.
  std::string structured() const;
};

Report chiReport(const spaces::BettiVector& b, unsigned maxJ, bool alternate);

/// `maxJ` defaults to the span of the degree range.
Report complexReport(const chain::ComplexFile& file, std::optional<unsigned> maxJ = {});

Report simplicialReport(const spaces::SimplicialComplex& k);

Report spaceReport(const spaces::SpaceExpr& e, std::optional<long> kervaireDimension,
                   bool torusOrder);

Report symReport(const spaces::BettiVector& b, unsigned order, bool verifyEuler);

Report k0Report(const k0::K0Complex& m, const std::optional<k0::RankMap>& ranks,
                std::optional<unsigned> maxJ = {});

Report adamsReport(unsigned long n, unsigned long k);

/// One of chi_c, poincare, hodge, hodge-higher, count.
Report motivicReport(const motivic::VarietyExpr& e, std::string_view measure);

Report fincatReport(const fincat::HomCountMatrix& a, unsigned order);

/// Runs the built-in consistency checks. Throws InvariantViolation on the
/// first failure; `injectFault` corrupts one expected value so that the
/// failure path can be exercised.
Report selfcheckReport(bool injectFault);

} // namespace eulertower::report
