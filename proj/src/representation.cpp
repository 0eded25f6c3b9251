#include "orthoconvex/representation.hpp"

#include "chains.hpp"
#include "orthoconvex/error.hpp"

namespace oc {

bool halfplane_contains(const StaircaseHalfplane& h, const Pt2& p) {
  Side s = h.line.side_of(p);
  return s == Side::On || s == h.side;
}

bool HalfplaneFamily::contains(const Pt2& p) const {
  for (const StaircaseHalfplane& h : halfplanes)
    if (!halfplane_contains(h, p)) return false;
  return true;
}

HalfplaneFamily four_chain_decomposition(const GridRegion& r) {
  if (r.empty()) throw Error(ErrorCode::EmptyInput, "region is empty");
  if (!is_path_connected(r)) throw Error(ErrorCode::NotPathConnected, "region is not path-connected");
  if (!is_ortho_convex_region(r)) throw Error(ErrorCode::NotOrthoConvex, "region is not ortho-convex");
  using detail::Quadrant;
  struct Spec {
    Quadrant q;
    AxisDir head, tail;
  };
  const Spec specs[] = {
      {Quadrant::NE, AxisDir::PosY, AxisDir::NegY},
      {Quadrant::SE, AxisDir::NegX, AxisDir::PosX},
      {Quadrant::SW, AxisDir::PosY, AxisDir::NegY},
      {Quadrant::NW, AxisDir::NegX, AxisDir::PosX},
  };
  Pt2 inside = r.cell_center(r.cells().front());
  HalfplaneFamily f;
  for (const Spec& s : specs) {
    auto line = detail::chain_line(r, s.q, s.head, s.tail);
    if (!line) throw Error(ErrorCode::ConstructionFailed, "boundary chain is not a staircase");
    f.halfplanes.push_back({*line, line->side_of(inside)});
  }
  return f;
}

namespace {

struct Lattice {
  Pt2 origin;
  Rat cell;
  std::int64_t nx, ny;
};

Lattice window_lattice(const HalfplaneFamily& f, const AxisRect& window, const Rat& cell) {
  if (f.halfplanes.empty()) throw Error(ErrorCode::EmptyInput, "halfplane family is empty");
  if (cell.sign() <= 0) throw Error(ErrorCode::NonAlignedCell, "cell size must be positive");
  Rat fx = window.width() / cell, fy = window.height() / cell;
  if (!fx.is_integer() || !fy.is_integer())
    throw Error(ErrorCode::NonAlignedCell, "cell " + cell.str() + " does not divide the window");
  return {window.min(), cell, fx.to_int64(), fy.to_int64()};
}

}  // namespace

GridRegion intersect_family(const HalfplaneFamily& f, const AxisRect& window, const Rat& cell) {
  Lattice lat = window_lattice(f, window, cell);
  const std::int64_t w = lat.nx + 1;
  std::vector<unsigned char> inside(static_cast<std::size_t>(w * (lat.ny + 1)), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 0; j <= lat.ny; ++j)
    for (std::int64_t i = 0; i <= lat.nx; ++i) {
      Pt2 p{lat.origin.x + Rat(i) * cell, lat.origin.y + Rat(j) * cell};
      inside[static_cast<std::size_t>(j * w + i)] = f.contains(p) ? 1 : 0;
    }
  auto at = [&](std::int64_t i, std::int64_t j) { return inside[static_cast<std::size_t>(j * w + i)] != 0; };
  std::vector<Cell> cells;
  for (std::int64_t i = 0; i < lat.nx; ++i)
    for (std::int64_t j = 0; j < lat.ny; ++j)
      if (at(i, j) && at(i + 1, j) && at(i, j + 1) && at(i + 1, j + 1)) cells.push_back({i, j});
  return GridRegion(lat.origin, cell, std::move(cells));
}

GridRegion intersect_family_reference(const HalfplaneFamily& f, const AxisRect& window, const Rat& cell) {
  Lattice lat = window_lattice(f, window, cell);
  std::vector<Cell> cells;
  for (std::int64_t i = 0; i < lat.nx; ++i)
    for (std::int64_t j = 0; j < lat.ny; ++j) {
      bool all = true;
      for (std::int64_t di = 0; di <= 1 && all; ++di)
        for (std::int64_t dj = 0; dj <= 1 && all; ++dj) {
          Pt2 p{lat.origin.x + Rat(i + di) * cell, lat.origin.y + Rat(j + dj) * cell};
          for (const StaircaseHalfplane& h : f.halfplanes)
            if (!halfplane_contains(h, p)) {
              all = false;
              break;
            }
        }
      if (all) cells.push_back({i, j});
    }
  return GridRegion(lat.origin, cell, std::move(cells));
}

}  // namespace oc
