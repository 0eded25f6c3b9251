#pragma once

#include <cstddef>

#include "orthoconvex/regions.hpp"

namespace oc {

struct HullResult {
  GridRegion region;
  /// Row-then-column sweep rounds run, including the final round that
  /// changed nothing.
  std::size_t iterations = 0;
};

/// Smallest superset of R's cells on R's lattice in which every row and
/// every column is one contiguous run. Rows (columns) are swept in parallel.
///
/// The result is ortho-convex whenever it is path-connected, in particular
/// whenever R is. For scattered inputs such as {(0,0),(2,1)} nothing is
/// filled and the closed union can still fail the lattice-line test.
HullResult ortho_hull(const GridRegion& r);

/// Serial reference for ortho_hull, used to cross-check the parallel sweeps.
HullResult ortho_hull_reference(const GridRegion& r);

/// Hull of a point set on the lattice with the given cell size anchored at
/// the points' minimum coordinates; each point becomes the cell whose
/// lower-left corner it is. Throws Error(NonAlignedCell) for points off that
/// lattice and Error(EmptyInput) for an empty set.
HullResult ortho_hull_points(const PointSet2& points, const Rat& cell);

}  // namespace oc
