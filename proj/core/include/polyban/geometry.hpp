#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "polyban/rational.hpp"

namespace polyban {

/// Largest ambient dimension the polytope routines accept by default.
inline constexpr std::size_t kDefaultDimensionCap = 6;

/// The closed halfspace { x : normal · x <= offset }.
struct Halfspace {
  RatVec normal;
  Rational offset;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace&, const Halfspace&) = default;
};

/// Rescales so the offset is 1 when positive; otherwise so the first nonzero
/// normal entry has absolute value 1.
Halfspace canonical(Halfspace h);

/// Vertices of the bounded full-dimensional polytope cut out by `facets`,
/// sorted lexicographically. Redundant inequalities are tolerated.
///
/// Throws UnboundedPolytope when a recession direction exists,
/// DegenerateSystem when the polytope is empty or lower-dimensional, and
/// DimensionCapExceeded when dim > dim_cap.
std::vector<RatVec> vertex_enumerate(const std::vector<Halfspace>& facets, std::size_t dim,
                                     std::size_t dim_cap = kDefaultDimensionCap);

/// Irredundant facet description of conv(points), canonicalized and sorted.
/// Throws DegenerateSystem when the hull is not full-dimensional.
std::vector<Halfspace> convex_hull_facets(const std::vector<RatVec>& points, std::size_t dim,
                                          std::size_t dim_cap = kDefaultDimensionCap);

/// Extreme rays of the pointed cone { z : row · z >= 0 for every row },
/// normalized so the first nonzero coordinate has absolute value 1.
/// Returns an empty list when the cone has a nontrivial lineality space.
std::vector<RatVec> cone_extreme_rays(const std::vector<RatVec>& rows, std::size_t dim);

void sort_unique(std::vector<RatVec>& points);

/// Dimension of the affine hull of `points` (-1 for the empty set).
long affine_dimension(const std::vector<RatVec>& points, std::size_t dim);

}  // namespace polyban
