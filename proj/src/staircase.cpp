#include "orthoconvex/staircase.hpp"

#include <algorithm>

#include "orthoconvex/error.hpp"

namespace oc {

std::string_view axis_dir_name(AxisDir d) {
  switch (d) {
    case AxisDir::PosX: return "+x";
    case AxisDir::NegX: return "-x";
    case AxisDir::PosY: return "+y";
    case AxisDir::NegY: return "-y";
  }
  return "+x";
}

std::optional<AxisDir> parse_axis_dir(std::string_view s) {
  for (AxisDir d : {AxisDir::PosX, AxisDir::NegX, AxisDir::PosY, AxisDir::NegY})
    if (axis_dir_name(d) == s) return d;
  return std::nullopt;
}

Pt2 axis_dir_vector(AxisDir d) {
  switch (d) {
    case AxisDir::PosX: return {Rat(1), Rat(0)};
    case AxisDir::NegX: return {Rat(-1), Rat(0)};
    case AxisDir::PosY: return {Rat(0), Rat(1)};
    case AxisDir::NegY: return {Rat(0), Rat(-1)};
  }
  return {Rat(1), Rat(0)};
}

AxisDir opposite(AxisDir d) {
  switch (d) {
    case AxisDir::PosX: return AxisDir::NegX;
    case AxisDir::NegX: return AxisDir::PosX;
    case AxisDir::PosY: return AxisDir::NegY;
    case AxisDir::NegY: return AxisDir::PosY;
  }
  return d;
}

std::string_view side_name(Side s) {
  switch (s) {
    case Side::Left: return "Left";
    case Side::Right: return "Right";
    case Side::On: return "On";
  }
  return "On";
}

std::optional<Side> parse_side(std::string_view s) {
  for (Side v : {Side::Left, Side::Right, Side::On})
    if (side_name(v) == s) return v;
  return std::nullopt;
}

namespace {

struct Signs {
  int x = 0;
  int y = 0;
};

// Records step direction signs; false on a diagonal step or a reversal.
bool add_step(Signs& acc, const Pt2& step) {
  int sx = step.x.sign(), sy = step.y.sign();
  if (sx != 0 && sy != 0) return false;
  if (sx != 0) {
    if (acc.x == -sx) return false;
    acc.x = sx;
  }
  if (sy != 0) {
    if (acc.y == -sy) return false;
    acc.y = sy;
  }
  return true;
}

bool same_direction(const Pt2& u, const Pt2& v) {
  return u.x.sign() == v.x.sign() && u.y.sign() == v.y.sign();
}

}  // namespace

StaircaseSegment::StaircaseSegment(std::vector<Pt2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidGeometry, "staircase segment needs a vertex");
  Signs acc;
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    Pt2 step = vertices_[k] - vertices_[k - 1];
    if (step.x.sign() == 0 && step.y.sign() == 0)
      throw Error(ErrorCode::InvalidGeometry, "staircase repeats vertex " + vertices_[k].str());
    if (!add_step(acc, step))
      throw Error(ErrorCode::InvalidGeometry, "step into " + vertices_[k].str() + " breaks the staircase pattern");
  }
}

StaircaseLine::StaircaseLine(std::vector<Pt2> core, AxisDir head, AxisDir tail) : head_(head), tail_(tail) {
  if (core.empty()) throw Error(ErrorCode::InvalidGeometry, "staircase line needs a core vertex");
  core.erase(std::unique(core.begin(), core.end()), core.end());
  StaircaseSegment check(core);
  Signs acc;
  Pt2 in = axis_dir_vector(opposite(head));
  Pt2 out = axis_dir_vector(tail);
  add_step(acc, in);
  for (std::size_t k = 1; k < core.size(); ++k)
    if (!add_step(acc, core[k] - core[k - 1]))
      throw Error(ErrorCode::InvalidGeometry, "core step reverses the head ray");
  if (!add_step(acc, out)) throw Error(ErrorCode::InvalidGeometry, "tail ray reverses the staircase");

  // Merge collinear interior vertices, then absorb end steps into the rays.
  std::vector<Pt2> merged;
  for (const Pt2& p : core) {
    if (merged.size() >= 2 && same_direction(merged.back() - merged[merged.size() - 2], p - merged.back()))
      merged.back() = p;
    else
      merged.push_back(p);
  }
  std::size_t first = 0, last = merged.size() - 1;
  if (last > first && same_direction(merged[1] - merged[0], in)) ++first;
  if (last > first && same_direction(merged[last] - merged[last - 1], out)) --last;
  core_.assign(merged.begin() + static_cast<std::ptrdiff_t>(first), merged.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  sx_ = acc.x == 0 ? 1 : acc.x;
  sy_ = acc.y == 0 ? 1 : acc.y;
  for (const Pt2& p : core_) key_.push_back(Rat(sx_) * p.x + Rat(sy_) * p.y);
}

Side StaircaseLine::side_of(const Pt2& p) const {
  // s = sx*x + sy*y grows strictly along the traversal, so exactly one line
  // point c has s(c) == s(p); p is compared against it.
  Rat sp = Rat(sx_) * p.x + Rat(sy_) * p.y;
  Pt2 c;
  if (sp <= key_.front()) {
    c = core_.front() + (key_.front() - sp) * axis_dir_vector(head_);
  } else if (sp >= key_.back()) {
    c = core_.back() + (sp - key_.back()) * axis_dir_vector(tail_);
  } else {
    auto it = std::upper_bound(key_.begin(), key_.end(), sp);
    std::size_t k = static_cast<std::size_t>(it - key_.begin()) - 1;
    Pt2 step = core_[k + 1] - core_[k];
    Rat len = abs(step.x) + abs(step.y);
    c = core_[k] + ((sp - key_[k]) / len) * step;
  }
  if (p == c) return Side::On;
  return Rat(sx_) * (p.y - c.y) > Rat(0) ? Side::Left : Side::Right;
}

namespace {

// Closed axis segment [a,b] against the ray from o in direction d.
bool segment_meets_ray(const AxisRect& seg, const Pt2& o, AxisDir d) {
  switch (d) {
    case AxisDir::PosX: return seg.min().y <= o.y && o.y <= seg.max().y && seg.max().x >= o.x;
    case AxisDir::NegX: return seg.min().y <= o.y && o.y <= seg.max().y && seg.min().x <= o.x;
    case AxisDir::PosY: return seg.min().x <= o.x && o.x <= seg.max().x && seg.max().y >= o.y;
    case AxisDir::NegY: return seg.min().x <= o.x && o.x <= seg.max().x && seg.min().y <= o.y;
  }
  return false;
}

}  // namespace

bool StaircaseLine::meets(const Pt2& a, const Pt2& b) const {
  AxisRect seg = AxisRect::of_points(a, b);
  if (segment_meets_ray(seg, core_.front(), head_) || segment_meets_ray(seg, core_.back(), tail_)) return true;
  for (std::size_t k = 1; k < core_.size(); ++k)
    if (seg.intersects(AxisRect::of_points(core_[k - 1], core_[k]))) return true;
  return false;
}

namespace {

AxisDir flip_x(AxisDir d) {
  if (d == AxisDir::PosX) return AxisDir::NegX;
  if (d == AxisDir::NegX) return AxisDir::PosX;
  return d;
}

AxisDir flip_y(AxisDir d) {
  if (d == AxisDir::PosY) return AxisDir::NegY;
  if (d == AxisDir::NegY) return AxisDir::PosY;
  return d;
}

}  // namespace

StaircaseLine StaircaseLine::reflect_x() const {
  std::vector<Pt2> v;
  for (const Pt2& p : core_) v.push_back({-p.x, p.y});
  return StaircaseLine(std::move(v), flip_x(head_), flip_x(tail_));
}

StaircaseLine StaircaseLine::reflect_y() const {
  std::vector<Pt2> v;
  for (const Pt2& p : core_) v.push_back({p.x, -p.y});
  return StaircaseLine(std::move(v), flip_y(head_), flip_y(tail_));
}

}  // namespace oc
