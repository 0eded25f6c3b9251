#pragma once

#include <cstdint>
#include <vector>

#include "orthoconvex/regions.hpp"
#include "parallel.hpp"

namespace oc::detail {

/// Boundary segment in lattice units (x0 <= x1, y0 <= y1).
struct IdxSeg {
  std::int64_t x0, y0, x1, y1;
};

std::vector<IdxSeg> boundary_idx_segments(const GridRegion& r);
std::vector<AxisRect> boundary_rects(const GridRegion& r);
/// Closed membership of lattice point (x, y).
bool lattice_point_in(const GridRegion& r, std::int64_t x, std::int64_t y);
/// Cell indices along one axis whose closed extent contains coord (1 or 2).
void candidate_indices(const Rat& coord, const Rat& origin, const Rat& cell, std::int64_t out[2], int& n);

/// Cells of the pitch lattice anchored at anchor whose closed squares meet r.
GridRegion touched_cells(const GridRegion& r, const Pt2& anchor, const Rat& pitch);

}  // namespace oc::detail
