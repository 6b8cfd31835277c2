// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "eulertower/chain/matrix.hpp"

namespace eulertower::chain {

struct SmithForm {
  std::size_t rank = 0;
  /// Positive diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<Integer> invariantFactors;
};

/// Smith normal form by unimodular row and column operations. The pivot is
/// always the smallest nonzero entry by absolute value (row-major scan,
/// candidates from the pivot column before the pivot row), so the sequence of
/// operations is deterministic.
SmithForm smithNormalForm(IntegerMatrix m);

} // namespace eulertower::chain
