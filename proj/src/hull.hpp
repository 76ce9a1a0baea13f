#pragma once

// Exact beneath-beyond convex hull over integer points, shared by the
// lattice and rational polytope front ends.

#include <cstddef>
#include <vector>

#include "conifold/exact.hpp"

namespace conifold::detail {

using IntPoint = std::vector<Integer>;

struct HullFacet {
  IntPoint normal;                  // primitive, pointing into the polytope
  Integer level;                    // normal . x == level on the facet
  std::vector<std::size_t> points;  // every input point on the facet, ascending
};

struct HullResult {
  std::vector<std::size_t> vertices;  // ascending indices of extremal points
  std::vector<HullFacet> facets;      // ascending by normal
  Rational normalized_volume;         // dim! * Euclidean volume
};

// `points` must be pairwise distinct and sorted lexicographically so that
// index order equals the canonical order.
HullResult integer_hull(const std::vector<IntPoint>& points, int dim);

Integer dot(const IntPoint& a, const IntPoint& b);

}  // namespace conifold::detail
