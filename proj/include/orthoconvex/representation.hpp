#pragma once

#include <vector>

#include "orthoconvex/regions.hpp"
#include "orthoconvex/staircase.hpp"

namespace oc {

/// Closed side of a staircase line; side is Left or Right.
struct StaircaseHalfplane {
  StaircaseLine line;
  Side side;
};

bool halfplane_contains(const StaircaseHalfplane& h, const Pt2& p);

struct HalfplaneFamily {
  std::vector<StaircaseHalfplane> halfplanes;
  bool contains(const Pt2& p) const;
};

/// Four staircase-halfplanes whose intersection is exactly R: the NE, SE,
/// SW and NW boundary chains, each closed off by axis rays. Rays alternate
/// between vertical and horizontal so a rectangle yields its four sides.
/// Throws Error(EmptyInput, NotPathConnected, NotOrthoConvex).
HalfplaneFamily four_chain_decomposition(const GridRegion& r);

/// Cells of the window lattice (anchored at window.min) lying in every
/// halfplane. Throws Error(NonAlignedCell) unless cell divides both window
/// sides, Error(EmptyInput) for an empty family.
GridRegion intersect_family(const HalfplaneFamily& f, const AxisRect& window, const Rat& cell);

/// Serial per-cell reference for intersect_family.
GridRegion intersect_family_reference(const HalfplaneFamily& f, const AxisRect& window, const Rat& cell);

}  // namespace oc
