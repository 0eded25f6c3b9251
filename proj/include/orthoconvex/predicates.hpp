#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "orthoconvex/geometry.hpp"

namespace oc {

/// Ordered path through at least one point; consecutive points distinct.
class Polyline {
 public:
  /// Throws Error(InvalidGeometry) on an empty list or a repeated point.
  explicit Polyline(std::vector<Pt2> points);

  std::span<const Pt2> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Pt2& front() const { return points_.front(); }
  const Pt2& back() const { return points_.back(); }
  Polyline reversed() const;

 private:
  std::vector<Pt2> points_;
};

enum class MonotoneClass { IncreasingXY, DecreasingXY, Both, None };

std::string_view monotone_class_name(MonotoneClass c);

/// x and y each move in one direction along the path (never reverse);
/// IncreasingXY when they move together, DecreasingXY when opposite, Both
/// when one coordinate stays constant.
MonotoneClass classify_monotone(const Polyline& g);

bool is_ortho_convex_path(const Polyline& g);

/// Certified enclosure of the Euclidean length with hi - lo <= tol.
/// Axis-parallel segments are summed exactly.
RatInterval path_length(const Polyline& g, const Rat& tol);

/// Certifies |a-b| <= length <= |a-b|_1 for the endpoints a, b. Throws
/// Error(NotMonotone) on a non-monotone path.
bool check_sandwich(const Polyline& g);

}  // namespace oc
