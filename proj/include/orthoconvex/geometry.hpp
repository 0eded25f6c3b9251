#pragma once

#include <compare>
#include <functional>
#include <string>

#include "orthoconvex/rat.hpp"

namespace oc {

struct Pt2 {
  Rat x;
  Rat y;

  friend bool operator==(const Pt2&, const Pt2&) = default;
  friend std::strong_ordering operator<=>(const Pt2& a, const Pt2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
  friend Pt2 operator+(const Pt2& a, const Pt2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt2 operator-(const Pt2& a, const Pt2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Pt2 operator*(const Rat& s, const Pt2& p) { return {s * p.x, s * p.y}; }

  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

/// Horizontal or vertical closed segment; p == q is allowed.
class AxisSegment {
 public:
  /// Throws Error(NotAxisAligned) when p and q share neither coordinate.
  AxisSegment(Pt2 p, Pt2 q);

  const Pt2& p() const { return p_; }
  const Pt2& q() const { return q_; }
  bool horizontal() const { return p_.y == q_.y; }
  bool vertical() const { return p_.x == q_.x; }

 private:
  Pt2 p_;
  Pt2 q_;
};

/// Closed axis-aligned rectangle, possibly degenerate.
class AxisRect {
 public:
  /// Throws Error(InvalidGeometry) unless min <= max componentwise.
  AxisRect(Pt2 min, Pt2 max);
  static AxisRect of_points(const Pt2& a, const Pt2& b);
  static AxisRect of_segment(const AxisSegment& s) { return of_points(s.p(), s.q()); }

  const Pt2& min() const { return min_; }
  const Pt2& max() const { return max_; }
  Rat width() const { return max_.x - min_.x; }
  Rat height() const { return max_.y - min_.y; }
  bool contains(const Pt2& p) const {
    return min_.x <= p.x && p.x <= max_.x && min_.y <= p.y && p.y <= max_.y;
  }
  bool intersects(const AxisRect& o) const {
    return min_.x <= o.max_.x && o.min_.x <= max_.x && min_.y <= o.max_.y && o.min_.y <= max_.y;
  }
  friend bool operator==(const AxisRect&, const AxisRect&) = default;

 private:
  Pt2 min_;
  Pt2 max_;
};

/// Squared Euclidean distance |a-b|^2.
Rat norm2_sq(const Pt2& a, const Pt2& b);
/// Manhattan distance |a_x-b_x| + |a_y-b_y|.
Rat norm1(const Pt2& a, const Pt2& b);

/// Squared distance between two closed rectangles (0 when they meet).
Rat rect_distance_sq(const AxisRect& a, const AxisRect& b);
Rat point_rect_distance_sq(const Pt2& p, const AxisRect& r);

/// A rational r >= 0 with r*r <= x and x - r*r <= slack. Requires x >= 0 and
/// slack > 0; exact square roots of perfect squares are returned exactly.
Rat rat_sqrt_lower(const Rat& x, const Rat& slack);
/// A rational r >= sqrt(x) with r - sqrt(x) <= width.
Rat rat_sqrt_upper(const Rat& x, const Rat& width);

struct RatInterval {
  Rat lo;
  Rat hi;
  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

/// Encloses sqrt(x) in [lo, hi] with hi - lo <= width (a point interval when
/// x is a perfect square).
RatInterval sqrt_bracket(const Rat& x, const Rat& width);

}  // namespace oc

template <>
struct std::hash<oc::Pt2> {
  std::size_t operator()(const oc::Pt2& p) const noexcept {
    std::size_t h = p.x.hash();
    return h ^ (p.y.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
