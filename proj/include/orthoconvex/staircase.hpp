#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "orthoconvex/geometry.hpp"

namespace oc {

enum class AxisDir { PosX, NegX, PosY, NegY };

/// "+x", "-x", "+y", "-y".
std::string_view axis_dir_name(AxisDir d);
/// Inverse of axis_dir_name; nullopt on anything else.
std::optional<AxisDir> parse_axis_dir(std::string_view s);
Pt2 axis_dir_vector(AxisDir d);
AxisDir opposite(AxisDir d);

enum class Side { Left, Right, On };
std::string_view side_name(Side s);
std::optional<Side> parse_side(std::string_view s);

/// Axis-parallel polyline whose horizontal steps all point one way and whose
/// vertical steps all point one way.
class StaircaseSegment {
 public:
  /// Throws Error(InvalidGeometry) on a diagonal step, a repeated point, or a
  /// step that reverses an earlier one.
  explicit StaircaseSegment(std::vector<Pt2> vertices);
  std::span<const Pt2> vertices() const { return vertices_; }

 private:
  std::vector<Pt2> vertices_;
};

/// Staircase segment extended by two rays: the head ray leaves the first
/// vertex in direction head(), the tail ray leaves the last vertex in
/// direction tail(). Traversal runs in from the head ray, along the core and
/// out along the tail ray; Left and Right refer to that traversal.
///
/// The stored form is canonical: collinear steps are merged and core steps
/// parallel to a ray are absorbed into it.
class StaircaseLine {
 public:
  /// Throws Error(InvalidGeometry) unless the traversal is a staircase (no
  /// reversal in x or in y) with axis-parallel steps; core must be nonempty.
  StaircaseLine(std::vector<Pt2> core, AxisDir head, AxisDir tail);

  std::span<const Pt2> vertices() const { return core_; }
  AxisDir head() const { return head_; }
  AxisDir tail() const { return tail_; }

  Side side_of(const Pt2& p) const;
  /// True iff the closed axis-parallel segment [a, b] meets the line.
  bool meets(const Pt2& a, const Pt2& b) const;

  /// Mirror images under x -> -x and y -> -y.
  StaircaseLine reflect_x() const;
  StaircaseLine reflect_y() const;

  friend bool operator==(const StaircaseLine&, const StaircaseLine&) = default;

 private:
  std::vector<Pt2> core_;
  AxisDir head_;
  AxisDir tail_;
  int sx_ = 1;
  int sy_ = 1;
  std::vector<Rat> key_;
};

}  // namespace oc
