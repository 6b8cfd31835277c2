// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "eulertower/chain/complex.hpp"

namespace eulertower::chain {

enum class Grading { Homological, Cohomological };

/// A complex as written in a file. Cohomological input (d^i : C^i -> C^{i+1})
/// is stored homologically with C_k = C^{-k}; `grading` remembers how to
/// label degrees on the way back out.
struct ComplexFile {
  Grading grading = Grading::Homological;
  ChainComplex complex;

  /// Degree label used in the file for an internal homological degree.
  long label(long internalDegree) const {
    return grading == Grading::Homological ? internalDegree : -internalDegree;
  }

  bool operator==(const ComplexFile&) const = default;
};

/// Line format:
///
///     # comment
///     grading cohomological      (optional, default homological)
///     range <low> <high>
///     ranks <r_low> ... <r_high>
///     d <i>                      followed by one line per target row
///     <entries>
///
/// `d i` is d_i : C_i -> C_{i-1} (homological) or d^i : C^i -> C^{i+1}
/// (cohomological). Omitted differentials are zero.
ComplexFile parseComplex(std::string_view text);

/// Canonical text: no comments, single spaces, nonzero differentials only,
/// ascending degree. parseComplex(serializeComplex(f)) == f.
std::string serializeComplex(const ComplexFile& file);

} // namespace eulertower::chain
