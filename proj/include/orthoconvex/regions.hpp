#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orthoconvex/geometry.hpp"

namespace oc {

/// Integer lattice index of a cell.
struct Cell {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Inclusive index-space bounding box.
struct CellBox {
  std::int64_t imin, jmin, imax, jmax;
  std::int64_t width() const { return imax - imin + 1; }
  std::int64_t height() const { return jmax - jmin + 1; }
};

/// Finite union of closed lattice cells
///   [origin.x + i*cell, origin.x + (i+1)*cell] x [origin.y + j*cell, ...].
///
/// The lattice is stored in canonical form: the origin is reduced modulo the
/// cell size into [0, cell)^2 and indices are shifted to match, so two regions
/// describing the same cells on the same lattice compare equal. Cells are kept
/// sorted and deduplicated.
class GridRegion {
 public:
  GridRegion() = default;
  /// Throws Error(InvalidGeometry) when cell <= 0.
  GridRegion(Pt2 origin, Rat cell, std::vector<Cell> cells);

  const Pt2& origin() const { return origin_; }
  const Rat& cell() const { return cell_; }
  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  bool has(Cell c) const;
  std::optional<CellBox> index_box() const;
  /// World-space bounding box; nullopt for the empty region.
  std::optional<AxisRect> bounds() const;

  AxisRect cell_rect(Cell c) const;
  Pt2 lattice_point(std::int64_t i, std::int64_t j) const;
  Pt2 cell_center(Cell c) const;

  /// Closed-set membership.
  bool contains(const Pt2& p) const;
  /// Same lattice (cell size and canonical origin).
  bool same_lattice(const GridRegion& o) const { return cell_ == o.cell_ && origin_ == o.origin_; }

  /// Same lattice, with the given cells.
  GridRegion with_cells(std::vector<Cell> cells) const;
  /// Sub-region relation on a shared lattice.
  bool subset_of(const GridRegion& o) const;

  friend bool operator==(const GridRegion&, const GridRegion&) = default;

 private:
  Pt2 origin_{Rat(0), Rat(0)};
  Rat cell_{1};
  std::vector<Cell> cells_;
};

/// Simple rectilinear polygon, stored counterclockwise.
class RectilinearPolygon {
 public:
  /// Validates alternation of horizontal/vertical edges, simplicity and at
  /// least four vertices; clockwise input is reversed. Collinear vertices are
  /// dropped. Throws Error(InvalidGeometry).
  explicit RectilinearPolygon(std::vector<Pt2> vertices);

  std::span<const Pt2> vertices() const { return vertices_; }
  Rat area() const;
  /// Closed membership.
  bool contains(const Pt2& p) const;
  AxisRect bounds() const;

 private:
  std::vector<Pt2> vertices_;
};

/// Finite deduplicated point set.
class PointSet2 {
 public:
  PointSet2() = default;
  explicit PointSet2(std::vector<Pt2> points);
  std::span<const Pt2> points() const { return points_; }
  bool empty() const { return points_.empty(); }
  bool contains(const Pt2& p) const;

 private:
  std::vector<Pt2> points_;
};

/// True iff the union of closed cells is path-connected (cells touching at an
/// edge or a corner are adjacent). The empty region is connected.
bool is_path_connected(const GridRegion& r);

/// Connected components under edge-or-corner adjacency.
std::vector<GridRegion> connected_components(const GridRegion& r);

/// True iff every horizontal and vertical line meets the closed union in a
/// connected set. Lines lying on a lattice coordinate meet the closures of
/// both adjacent rows (columns), so their union has to be connected too.
bool is_ortho_convex_region(const GridRegion& r);

/// Exact rasterisation of a polygon. The lattice is anchored at the polygon's
/// bounding-box minimum. Throws Error(NonAlignedCell) unless cell divides all
/// vertex coordinate differences.
GridRegion polygon_to_region(const RectilinearPolygon& p, const Rat& cell);

/// Maximal boundary segments of the closed union (edges between an occupied
/// and an empty cell, merged along their supporting line).
std::vector<AxisSegment> boundary_segments(const GridRegion& r);

/// Exact squared Euclidean distance between two nonempty closed sets.
/// Throws Error(EmptyInput) if either is empty.
Rat region_distance_sq(const GridRegion& a, const GridRegion& b);
Rat region_distance_sq(const PointSet2& a, const GridRegion& b);
Rat region_distance_sq(const GridRegion& a, const PointSet2& b);
Rat region_distance_sq(const PointSet2& a, const PointSet2& b);

/// Serial reference: minimum over every pair of cells. Same contract.
Rat region_distance_sq_reference(const GridRegion& a, const GridRegion& b);

/// Squared distance from a point to a nonempty closed region.
Rat point_region_distance_sq(const Pt2& p, const GridRegion& r);

/// Per-column extent of a region whose occupied columns form one run and
/// whose columns are each one contiguous run of cells: column imin + k covers
/// rows [bottom[k], top[k]) in lattice units. Returns nullopt otherwise.
struct ColumnProfile {
  std::int64_t imin = 0;
  std::vector<std::int64_t> bottom;
  std::vector<std::int64_t> top;
  std::int64_t imax() const { return imin + static_cast<std::int64_t>(bottom.size()) - 1; }
};
std::optional<ColumnProfile> column_profile(const GridRegion& r);

}  // namespace oc
