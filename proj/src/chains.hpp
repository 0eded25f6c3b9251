#pragma once

#include <optional>
#include <vector>

#include "orthoconvex/regions.hpp"
#include "orthoconvex/staircase.hpp"

namespace oc::detail {

/// Quadrant of a region's boundary, named by the outward diagonal.
enum class Quadrant { NE, SE, SW, NW };

GridRegion reflect_x(const GridRegion& r);
GridRegion reflect_y(const GridRegion& r);
StaircaseLine reflect_line(const StaircaseLine& l, Quadrant q);
GridRegion to_ne_space(const GridRegion& r, Quadrant q);

/// NE boundary chain of a column-contiguous region, from the right end of
/// its top run down to the top of its rightmost column, as world points.
/// nullopt when the profile is not a descending staircase there.
std::optional<std::vector<Pt2>> ne_chain(const GridRegion& r);

/// Chain of quadrant q with the given rays (expressed in NE space) mapped
/// back to world space.
std::optional<StaircaseLine> chain_line(const GridRegion& r, Quadrant q, AxisDir head, AxisDir tail);

}  // namespace oc::detail
