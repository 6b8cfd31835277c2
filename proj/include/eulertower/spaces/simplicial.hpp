// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eulertower/chain/complex.hpp"
#include "eulertower/spaces/betti.hpp"

namespace eulertower::spaces {

/// Finite abstract simplicial complex given by its facets.
///
/// Vertices are ordered by label (integers numerically, integers before
/// names, names lexicographically); the orientation of every simplex follows
/// that order. Facets contained in other facets are dropped.
class SimplicialComplex {
public:
  using Simplex = std::vector<std::size_t>;

  SimplicialComplex() = default;
  explicit SimplicialComplex(const std::vector<std::vector<std::string>>& facets);

  const std::vector<std::string>& vertices() const { return vertices_; }
  /// Sorted vertex indices; facets in lexicographic order.
  const std::vector<Simplex>& facets() const { return facets_; }
  long dimension() const;

  /// All simplices of each dimension, lexicographically sorted.
  std::vector<std::vector<Simplex>> faces() const;

  /// Simplicial chain complex in degrees 0..dimension with boundary
  /// d[v_0..v_k] = sum_i (-1)^i [v_0..^v_i..v_k].
  chain::ChainComplex chainComplex() const;

  bool operator==(const SimplicialComplex&) const = default;

private:
  std::vector<std::string> vertices_;
  std::vector<Simplex> facets_;
};

/// One facet per line, whitespace-separated labels, '#' comments.
SimplicialComplex parseFacets(std::string_view text);
std::string serializeFacets(const SimplicialComplex& k);

/// Union of two complexes over their combined vertex labels.
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);
/// Simplices common to both complexes.
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);

BettiVector bettiOfComplex(const SimplicialComplex& k);
chain::HomologySummary homologyOfComplex(const SimplicialComplex& k);

} // namespace eulertower::spaces
