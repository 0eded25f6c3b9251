#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "orthoconvex/limits.hpp"
#include "orthoconvex/ndim.hpp"
#include "orthoconvex/regions.hpp"

namespace oc {

/// Path-connected ortho-convex region on the unit lattice inside
/// [0, w] x [0, h], built from a unimodal top profile and a valley-shaped
/// bottom profile.
GridRegion random_ortho_convex_region(std::mt19937_64& rng, std::int64_t w, std::int64_t h);

/// Two disjoint path-connected ortho-convex regions inside [0, w]^2. About
/// half the pairs place the second region in a pocket of the first one's
/// bounding box.
std::pair<GridRegion, GridRegion> random_disjoint_pair(std::mt19937_64& rng, std::int64_t w);

/// Point outside r with rational coordinates (quarter-lattice) in
/// [-1, w + 1]^2.
Pt2 random_exterior_point(std::mt19937_64& rng, const GridRegion& r, std::int64_t w);

/// Monotone polyline with up to max_vertices vertices in [0, extent]^2
/// whose coordinates are multiples of 1/denominator.
Polyline random_monotone_polyline(std::mt19937_64& rng, std::int64_t extent, std::int64_t denominator,
                                  std::size_t max_vertices);

struct TemplateSequence {
  SetSequence sequence;
  std::vector<int> labels;  // template of each item
};

/// Items drawn from three unit-cell templates, each translated by a jitter
/// in {0, ..., 7}/64 per axis, inside the box [0, 16]^2.
TemplateSequence template_sequence(std::size_t items, std::uint64_t seed);

/// Ortho-convex n-dimensional region in [0, side)^dim: hull of a few random
/// boxes, retried until ortho-convex.
GridRegionN random_ortho_convex_n(std::mt19937_64& rng, std::size_t dim, std::int64_t side);

}  // namespace oc
