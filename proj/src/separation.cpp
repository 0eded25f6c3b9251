#include "orthoconvex/separation.hpp"

#include "chains.hpp"
#include "region_internal.hpp"
#include "orthoconvex/error.hpp"

namespace oc {

namespace {

using detail::Quadrant;

constexpr Quadrant kQuadrants[] = {Quadrant::NE, Quadrant::SE, Quadrant::SW, Quadrant::NW};

void require_region(const GridRegion& r, const char* what) {
  if (r.empty()) throw Error(ErrorCode::EmptyInput, std::string(what) + " is empty");
  if (!is_path_connected(r)) throw Error(ErrorCode::NotPathConnected, std::string(what) + " is not path-connected");
  if (!is_ortho_convex_region(r)) throw Error(ErrorCode::NotOrthoConvex, std::string(what) + " is not ortho-convex");
}

// Pitch s with 8 s^2 <= d2, close to d / (2 sqrt 2).
Rat grid_pitch(const Rat& d2) { return rat_sqrt_lower(d2 / Rat(8), d2 / Rat(32)); }

// L-line through the two edges of rect meeting at the corner of quadrant q.
StaircaseLine corner_line(const AxisRect& rect, Quadrant q) {
  switch (q) {
    case Quadrant::NE: return StaircaseLine({rect.max()}, AxisDir::NegX, AxisDir::NegY);
    case Quadrant::SE: return StaircaseLine({{rect.max().x, rect.min().y}}, AxisDir::NegX, AxisDir::PosY);
    case Quadrant::SW: return StaircaseLine({rect.min()}, AxisDir::PosX, AxisDir::PosY);
    case Quadrant::NW: return StaircaseLine({{rect.min().x, rect.max().y}}, AxisDir::PosX, AxisDir::NegY);
  }
  return StaircaseLine({rect.max()}, AxisDir::NegX, AxisDir::NegY);
}

bool region_clear(const StaircaseLine& line, const GridRegion& r, Side side) {
  if (side == Side::On) return false;
  for (const Cell& c : r.cells()) {
    AxisRect box = r.cell_rect(c);
    Pt2 corners[4] = {box.min(), {box.max().x, box.min().y}, box.max(), {box.min().x, box.max().y}};
    for (int k = 0; k < 4; ++k) {
      if (line.side_of(corners[k]) != side) return false;
      if (line.meets(corners[k], corners[(k + 1) % 4])) return false;
    }
  }
  return true;
}

std::optional<SeparationCert> try_line(const StaircaseLine& line, const GridRegion& a, const GridRegion& b,
                                       const Rat& s) {
  Side sa = line.side_of(a.cell_center(a.cells().front()));
  Side sb = line.side_of(b.cell_center(b.cells().front()));
  SeparationCert cert{line, sa, sb, s};
  if (verify_certificate(cert, a, b)) return cert;
  return std::nullopt;
}

std::optional<SeparationCert> try_line(const StaircaseLine& line, const GridRegion& a, const Pt2& p, const Rat& s) {
  SeparationCert cert{line, line.side_of(a.cell_center(a.cells().front())), line.side_of(p), s};
  if (verify_certificate(cert, a, p)) return cert;
  return std::nullopt;
}

bool meets_rect(const GridRegion& r, const AxisRect& rect) {
  for (const Cell& c : r.cells())
    if (r.cell_rect(c).intersects(rect)) return true;
  return false;
}

}  // namespace

GridRegion grid_inflation(const GridRegion& a, const Rat& s) {
  auto bounds = a.bounds();
  return detail::touched_cells(a, bounds ? bounds->min() : Pt2{Rat(0), Rat(0)}, s);
}

SeparationCert separate_point(const GridRegion& s, const Pt2& p) {
  require_region(s, "region");
  if (s.contains(p)) throw Error(ErrorCode::PointInside, "point " + p.str() + " lies in the region");
  Rat d2 = point_region_distance_sq(p, s);
  Rat pitch = grid_pitch(d2);
  // p is the shared vertex of the 2x2 block P; one of the four closed
  // quadrants holding P misses S.
  for (int attempt = 0; attempt < 4; ++attempt, pitch /= Rat(2)) {
    AxisRect block({p.x - pitch, p.y - pitch}, {p.x + pitch, p.y + pitch});
    for (Quadrant q : kQuadrants)
      if (auto cert = try_line(corner_line(block, q), s, p, pitch)) return *cert;
  }
  throw Error(ErrorCode::ConstructionFailed, "no corner line separates " + p.str());
}

SeparationCert separate_sets(const GridRegion& a, const GridRegion& b) {
  require_region(a, "first region");
  require_region(b, "second region");
  Rat d2 = region_distance_sq(a, b);
  if (d2.sign() == 0) throw Error(ErrorCode::NotDisjoint, "regions meet");
  Rat pitch = grid_pitch(d2);
  for (int attempt = 0; attempt < 4; ++attempt, pitch /= Rat(2)) {
    GridRegion ag = grid_inflation(a, pitch);
    if (region_distance_sq(ag, b).sign() == 0) continue;
    AxisRect box = *ag.bounds();
    std::vector<StaircaseLine> candidates;
    if (!meets_rect(b, box)) {
      for (Quadrant q : kQuadrants) candidates.push_back(corner_line(box, q));
    }
    // B inside P sits in one pocket of P minus A^g; the line follows A^g's
    // boundary chain there and leaves along P's edges.
    for (Quadrant q : kQuadrants)
      if (auto l = detail::chain_line(ag, q, AxisDir::NegX, AxisDir::NegY)) candidates.push_back(*l);
    GridRegion bg = grid_inflation(b, pitch);
    if (region_distance_sq(bg, a).sign() != 0) {
      AxisRect bbox = *bg.bounds();
      for (Quadrant q : kQuadrants) candidates.push_back(corner_line(bbox, q));
      for (Quadrant q : kQuadrants)
        if (auto l = detail::chain_line(bg, q, AxisDir::NegX, AxisDir::NegY)) candidates.push_back(*l);
    }
    for (const StaircaseLine& line : candidates)
      if (auto cert = try_line(line, a, b, pitch)) return *cert;
  }
  throw Error(ErrorCode::ConstructionFailed, "no staircase candidate separates the regions");
}

bool verify_certificate(const SeparationCert& cert, const GridRegion& a, const GridRegion& b) {
  if (cert.side_of_a == cert.side_of_b || cert.side_of_a == Side::On || cert.side_of_b == Side::On) return false;
  return region_clear(cert.line, a, cert.side_of_a) && region_clear(cert.line, b, cert.side_of_b);
}

bool verify_certificate(const SeparationCert& cert, const GridRegion& a, const Pt2& p) {
  if (cert.side_of_a == cert.side_of_b || cert.side_of_a == Side::On || cert.side_of_b == Side::On) return false;
  return cert.line.side_of(p) == cert.side_of_b && region_clear(cert.line, a, cert.side_of_a);
}

}  // namespace oc
