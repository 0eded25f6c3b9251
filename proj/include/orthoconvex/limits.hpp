#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orthoconvex/predicates.hpp"
#include "orthoconvex/regions.hpp"

namespace oc {

/// Certified enclosure [lo, hi] of a Hausdorff distance. resolution is the
/// sampling pitch actually used.
struct HausdorffDist {
  Rat lo;
  Rat hi;
  Rat resolution;
};

/// Samples each set on a sub-lattice of its cells with pitch <= refine and
/// takes exact point-to-set distances. lo is attained by a sample; hi adds
/// the Lipschitz slack, so hi - lo < refine. Throws Error(EmptyInput).
HausdorffDist hausdorff(const GridRegion& a, const GridRegion& b, const Rat& refine);
/// Serial reference evaluating every sample without pruning.
HausdorffDist hausdorff_reference(const GridRegion& a, const GridRegion& b, const Rat& refine);
/// Same certificate for polylines, sampled along each segment.
HausdorffDist hausdorff(const Polyline& a, const Polyline& b, const Rat& refine);

/// Shortest Euclidean path from a to b inside S over the visibility graph of
/// S's boundary corners. Throws Error(PointOutside, NotPathConnected,
/// NotOrthoConvex), or Error(ConstructionFailed) if the result is not
/// monotone.
Polyline shortest_ortho_path(const GridRegion& s, const Pt2& a, const Pt2& b);

/// True iff the closed segment [u, v] lies in the closed region.
bool segment_in_region(const GridRegion& s, const Pt2& u, const Pt2& v);

struct ConvergenceRow {
  std::int64_t n;
  Polyline path;
  RatInterval length;
  Rat euclid_sq;     // |a_n - b_n|^2
  Rat manhattan;     // |a_n - b_n|_1
  bool sandwich;     // |a-b| <= length <= |a-b|_1 certified
  Rat length_bound;  // analytic bound on |l - |a-b||
  HausdorffDist hausdorff;
  Rat hausdorff_bound;  // analytic bound on the certified hi
};

/// With d the unit direction of b - a and e its left normal,
/// a_n = a + (d + e)/n and b_n = b - (d + e)/n; gamma_n is a seeded random
/// monotone polyline from a_n to b_n, for n = 1..n_max. The length bound 2/n
/// holds once 2/n <= |a - b|. Throws Error(NotAxisAligned) unless [a, b] is
/// axis-parallel and Error(PreconditionViolated) when a == b.
std::vector<ConvergenceRow> path_convergence_report(const Pt2& a, const Pt2& b, std::int64_t n_max,
                                                    std::uint64_t seed);

struct SetSequence {
  std::vector<GridRegion> items;
  AxisRect bound;
};

struct BlaschkeLevel {
  Rat tol;
  std::vector<std::size_t> selected;
  /// Largest certified hi over consecutive selected pairs.
  Rat max_successive_hi;
};

struct BlaschkeResult {
  std::vector<std::size_t> indices;
  GridRegion limit_candidate;
  std::vector<BlaschkeLevel> levels;
  bool limit_ortho_convex = false;
};

/// Nested bucketing by the set of tol_k-cells (anchored at bound.min) each
/// item touches; the largest bucket survives, ties going to the bucket whose
/// first index is lowest. Throws Error(PreconditionViolated) for bad items or
/// schedule, Error(InsufficientItems) when fewer than two items survive a
/// level.
BlaschkeResult blaschke_select(const SetSequence& seq, const std::vector<Rat>& schedule);

/// Closed carrier check: connected and ortho-convex, so closure keeps both.
bool closure_preserves(const GridRegion& r);

/// Axis-parallel segment whose endpoints may be excluded.
struct EndpointSegment {
  Pt2 p;
  Pt2 q;
  bool p_closed = true;
  bool q_closed = true;
};

struct AxisLine {
  bool vertical;  // x = value when true, y = value otherwise
  Rat value;
  friend bool operator==(const AxisLine&, const AxisLine&) = default;
};

/// Lines (through every endpoint coordinate and every midpoint between
/// consecutive ones) whose intersection with the union is disconnected.
/// Empty iff the union is ortho-convex. Throws Error(NotAxisAligned).
std::vector<AxisLine> failing_lines(const std::vector<EndpointSegment>& set);

/// Every endpoint included.
std::vector<EndpointSegment> closure(std::vector<EndpointSegment> set);

}  // namespace oc
