#pragma once

#include "orthoconvex/regions.hpp"
#include "orthoconvex/staircase.hpp"

namespace oc {

/// A staircase line with the sides claimed for the two separated sets and
/// the grid pitch used to build it.
struct SeparationCert {
  StaircaseLine line;
  Side side_of_a;
  Side side_of_b;
  Rat grid_size;
};

/// Union of the pitch-s cells (lattice anchored at a's bounding-box minimum)
/// whose closed squares meet a. Every point of a lies in its interior.
GridRegion grid_inflation(const GridRegion& a, const Rat& s);

/// Staircase line strictly separating S (side_of_a) from p (side_of_b).
/// Throws Error(EmptyInput, NotPathConnected, NotOrthoConvex, PointInside),
/// or Error(ConstructionFailed) if no candidate verifies.
SeparationCert separate_point(const GridRegion& s, const Pt2& p);

/// Staircase line strictly separating a from b. Throws Error(EmptyInput,
/// NotPathConnected, NotOrthoConvex, NotDisjoint, ConstructionFailed).
SeparationCert separate_sets(const GridRegion& a, const GridRegion& b);

/// Independent check: the sides differ and are not On, every cell corner of
/// a (b) lies strictly on side_of_a (side_of_b), and no cell edge meets the
/// line.
bool verify_certificate(const SeparationCert& cert, const GridRegion& a, const GridRegion& b);
bool verify_certificate(const SeparationCert& cert, const GridRegion& a, const Pt2& p);

}  // namespace oc
