#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orthoconvex/regions.hpp"

namespace oc {

using IndexN = std::vector<std::int64_t>;

struct PtN {
  std::vector<Rat> coords;
  friend bool operator==(const PtN&, const PtN&) = default;
};

/// Finite union of closed cells of an n-dimensional lattice. Cells are kept
/// sorted and deduplicated.
class GridRegionN {
 public:
  /// Unit lattice at the origin.
  GridRegionN(std::size_t dim, std::vector<IndexN> cells);
  /// Throws Error(InvalidGeometry) on dim 0, wrong arity, or cell <= 0.
  GridRegionN(std::size_t dim, PtN origin, Rat cell, std::vector<IndexN> cells);

  std::size_t dim() const { return dim_; }
  const PtN& origin() const { return origin_; }
  const Rat& cell() const { return cell_; }
  std::span<const IndexN> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool has(const IndexN& c) const;
  GridRegionN with_cells(std::vector<IndexN> cells) const;

  friend bool operator==(const GridRegionN&, const GridRegionN&) = default;

 private:
  std::size_t dim_;
  PtN origin_;
  Rat cell_;
  std::vector<IndexN> cells_;
};

GridRegionN to_region_n(const GridRegion& r);

/// Every axis-parallel line meets the closed union in a connected set,
/// including lines running along cell faces and edges.
bool is_ortho_convex_n(const GridRegionN& r);

/// Cells with index k on axis (0-based), that coordinate dropped. Throws
/// Error(PreconditionViolated) unless dim >= 2 and axis < dim.
GridRegionN slice(const GridRegionN& r, std::size_t axis, std::int64_t k);

/// The closed hyperplane through the lattice face between layers k-1 and k:
/// the union of both layers' slices.
GridRegionN face_slice(const GridRegionN& r, std::size_t axis, std::int64_t k);

struct EquivalenceReport {
  bool lines = false;   // (a) axis lines meet the set connectedly
  bool slices = false;  // (b) every axis hyperplane section is ortho-convex
  bool points = false;  // (c) lattice sample points joined along an axis
  bool agree() const { return lines == slices && slices == points; }
};

/// Evaluates the three characterisations independently. (c) runs over
/// the points with half-integer lattice coordinates (cell centres, face
/// centres, corners). Throws Error(PreconditionViolated) for dim < 2.
EquivalenceReport check_equivalences(const GridRegionN& r);

/// Axis-line fill fixpoint over all n axes.
GridRegionN ortho_hull_n(const GridRegionN& r);

/// Cells whose 3^n - 1 neighbours are all occupied.
GridRegionN interior_region(const GridRegionN& r);

/// Open set described by relatively open lattice faces in doubled
/// coordinates: an odd coordinate lies inside a cell, an even one on the face
/// between two cells.
struct FaceSetN {
  std::size_t dim = 0;
  std::vector<IndexN> faces;  // sorted, unique
  bool has(const IndexN& q) const;
};

/// Topological interior of the closed union: faces all of whose incident
/// cells are occupied.
FaceSetN open_interior(const GridRegionN& r);

/// Every axis line meets the open set in a connected set.
bool is_ortho_convex_faces(const FaceSetN& s);

/// Coordinates permuted: new axis k is old axis perm[k].
GridRegionN permute_axes(const GridRegionN& r, const std::vector<std::size_t>& perm);

}  // namespace oc
