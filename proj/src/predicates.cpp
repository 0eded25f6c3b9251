#include "orthoconvex/predicates.hpp"

#include <algorithm>

#include "orthoconvex/error.hpp"

namespace oc {

Polyline::Polyline(std::vector<Pt2> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::InvalidGeometry, "polyline needs at least one point");
  for (std::size_t k = 1; k < points_.size(); ++k)
    if (points_[k] == points_[k - 1])
      throw Error(ErrorCode::InvalidGeometry, "polyline repeats point " + points_[k].str());
}

Polyline Polyline::reversed() const {
  std::vector<Pt2> r(points_.rbegin(), points_.rend());
  return Polyline(std::move(r));
}

std::string_view monotone_class_name(MonotoneClass c) {
  switch (c) {
    case MonotoneClass::IncreasingXY: return "IncreasingXY";
    case MonotoneClass::DecreasingXY: return "DecreasingXY";
    case MonotoneClass::Both: return "Both";
    case MonotoneClass::None: return "None";
  }
  return "None";
}

MonotoneClass classify_monotone(const Polyline& g) {
  int dx = 0, dy = 0;
  auto pts = g.points();
  for (std::size_t k = 1; k < pts.size(); ++k) {
    int sx = (pts[k].x - pts[k - 1].x).sign();
    int sy = (pts[k].y - pts[k - 1].y).sign();
    if (sx != 0) {
      if (dx == -sx) return MonotoneClass::None;
      dx = sx;
    }
    if (sy != 0) {
      if (dy == -sy) return MonotoneClass::None;
      dy = sy;
    }
  }
  if (dx == 0 || dy == 0) return MonotoneClass::Both;
  return dx == dy ? MonotoneClass::IncreasingXY : MonotoneClass::DecreasingXY;
}

bool is_ortho_convex_path(const Polyline& g) { return classify_monotone(g) != MonotoneClass::None; }

RatInterval path_length(const Polyline& g, const Rat& tol) {
  if (tol.sign() <= 0) throw Error(ErrorCode::PreconditionViolated, "length tolerance must be positive");
  auto pts = g.points();
  Rat exact(0);
  std::vector<Rat> diagonal;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const Pt2& a = pts[k - 1];
    const Pt2& b = pts[k];
    if (a.x == b.x || a.y == b.y) exact += norm1(a, b);
    else diagonal.push_back(norm2_sq(a, b));
  }
  RatInterval out{exact, exact};
  if (diagonal.empty()) return out;
  Rat each = tol / Rat(static_cast<std::int64_t>(diagonal.size()));
  for (const Rat& sq : diagonal) {
    RatInterval r = sqrt_bracket(sq, each);
    out.lo += r.lo;
    out.hi += r.hi;
  }
  return out;
}

namespace {

// Every vertex lies on segment [a,b], which with monotone order makes the
// path the segment itself.
bool collinear_with_ends(std::span<const Pt2> pts) {
  const Pt2& a = pts.front();
  const Pt2& b = pts.back();
  Pt2 d = b - a;
  for (const Pt2& p : pts) {
    Pt2 e = p - a;
    if (d.x * e.y != d.y * e.x) return false;
  }
  return true;
}

}  // namespace

bool check_sandwich(const Polyline& g) {
  if (!is_ortho_convex_path(g)) throw Error(ErrorCode::NotMonotone, "sandwich bound needs a monotone path");
  auto pts = g.points();
  const Pt2& a = pts.front();
  const Pt2& b = pts.back();
  Rat d2 = norm2_sq(a, b);
  Rat d1 = norm1(a, b);
  if (collinear_with_ends(pts)) {
    // length == |a-b| exactly; |a-b|^2 <= |a-b|_1^2 always
    return d2 <= d1 * d1;
  }
  bool all_axis = std::all_of(pts.begin() + 1, pts.end(), [&](const Pt2& q) {
    const Pt2& p = *(&q - 1);
    return p.x == q.x || p.y == q.y;
  });
  if (all_axis) {
    RatInterval l = path_length(g, Rat(1));
    return d2 <= l.lo * l.lo && l.hi <= d1;
  }
  // Both inequalities are strict here; tighten until the enclosure shows it.
  Rat tol(1);
  for (int round = 0; round < 256; ++round) {
    RatInterval l = path_length(g, tol);
    if (d2 < l.lo * l.lo && l.hi < d1) return true;
    tol /= Rat(16);
  }
  return false;
}

}  // namespace oc
