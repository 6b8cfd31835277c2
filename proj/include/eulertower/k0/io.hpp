// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "eulertower/k0/k0.hpp"

namespace eulertower::k0 {

/// One `degree: combination` line per term, '#' comments, e.g.
///
///     0: g
///     1: 2*g + h
K0Complex parseK0Complex(std::string_view text);

/// Canonical text, ascending degree, zero classes omitted.
std::string serializeK0Complex(const K0Complex& m);

/// `g=1,h=2` with nonnegative ranks.
RankMap parseRankMap(std::string_view text);

} // namespace eulertower::k0
