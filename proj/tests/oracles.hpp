// Brute-force oracles shared by the unit and acceptance tests. None of them
// call the predicates they are used to check.
#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "orthoconvex/geometry.hpp"
#include "orthoconvex/ndim.hpp"
#include "orthoconvex/regions.hpp"
#include "orthoconvex/representation.hpp"
#include "orthoconvex/staircase.hpp"

namespace oracle {

using oc::Pt2;
using oc::Rat;

struct IPt {
  std::int64_t x, y;
  friend bool operator==(const IPt&, const IPt&) = default;
};

// Fraction with positive denominator, compared by cross-multiplication.
struct Frac {
  std::int64_t n, d;
  friend bool operator<(const Frac& a, const Frac& b) { return a.n * b.d < b.n * a.d; }
  friend bool operator<=(const Frac& a, const Frac& b) { return a.n * b.d <= b.n * a.d; }
};

// Closed intervals on a line; true iff their union is connected (or empty).
inline bool union_connected(std::vector<std::pair<Frac, Frac>> iv) {
  if (iv.empty()) return true;
  std::sort(iv.begin(), iv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Frac reach = iv[0].second;
  for (std::size_t k = 1; k < iv.size(); ++k) {
    if (reach < iv[k].first) return false;
    if (reach < iv[k].second) reach = iv[k].second;
  }
  return true;
}

// Line-sweep test of a polyline with integer vertices (at most 16): every
// vertical and horizontal line through a vertex coordinate or halfway
// between two consecutive ones meets the polyline in a connected set.
inline bool polyline_sweep(const IPt* pts, std::size_t n) {
  std::array<std::int64_t, 32> cs{};
  std::array<std::pair<Frac, Frac>, 16> iv{};
  for (int axis = 0; axis < 2; ++axis) {
    auto u = [&](const IPt& p) { return axis == 0 ? p.x : p.y; };
    auto v = [&](const IPt& p) { return axis == 0 ? p.y : p.x; };
    std::size_t m = 0;
    for (std::size_t k = 0; k < n; ++k) cs[m++] = 2 * u(pts[k]);
    std::sort(cs.begin(), cs.begin() + m);
    m = static_cast<std::size_t>(std::unique(cs.begin(), cs.begin() + m) - cs.begin());
    std::size_t base = m;
    for (std::size_t k = 1; k < base; ++k) cs[m++] = (cs[k - 1] + cs[k]) / 2;
    for (std::size_t ci = 0; ci < m; ++ci) {
      std::int64_t c2 = cs[ci];
      std::size_t cnt = 0;
      if (n == 1 && 2 * u(pts[0]) == c2) iv[cnt++] = {{v(pts[0]), 1}, {v(pts[0]), 1}};
      for (std::size_t k = 1; k < n; ++k) {
        std::int64_t u0 = 2 * u(pts[k - 1]), u1 = 2 * u(pts[k]);
        std::int64_t v0 = v(pts[k - 1]), v1 = v(pts[k]);
        if (c2 < std::min(u0, u1) || c2 > std::max(u0, u1)) continue;
        if (u0 == u1) {
          iv[cnt++] = {{std::min(v0, v1), 1}, {std::max(v0, v1), 1}};
        } else {
          // v = v0 + (c2 - u0) (v1 - v0) / (u1 - u0)
          std::int64_t d = u1 - u0, num = v0 * d + (c2 - u0) * (v1 - v0);
          if (d < 0) {
            d = -d;
            num = -num;
          }
          iv[cnt++] = {{num, d}, {num, d}};
        }
      }
      std::sort(iv.begin(), iv.begin() + cnt, [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t k = 1; k < cnt; ++k) {
        if (iv[k - 1].second < iv[k].first) return false;
        if (iv[k].second < iv[k - 1].second) iv[k].second = iv[k - 1].second;
      }
    }
  }
  return true;
}

inline bool polyline_sweep(const std::vector<IPt>& pts) { return polyline_sweep(pts.data(), pts.size()); }

inline std::int64_t orient(const IPt& a, const IPt& b, const IPt& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline bool on_box(const IPt& a, const IPt& b, const IPt& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Closed segments [a,b] and [c,d] share a point.
inline bool segments_meet(const IPt& a, const IPt& b, const IPt& c, const IPt& d) {
  std::int64_t o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) return true;
  return (o1 == 0 && on_box(a, b, c)) || (o2 == 0 && on_box(a, b, d)) || (o3 == 0 && on_box(c, d, a)) ||
         (o4 == 0 && on_box(c, d, b));
}

// Segment (b, c) appended after (a, b) folds back onto it.
inline bool folds_back(const IPt& a, const IPt& b, const IPt& c) {
  return orient(a, b, c) == 0 && (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) < 0;
}

// No repeated consecutive points, adjacent segments share only their common
// vertex, other segments are disjoint.
inline bool is_simple(const std::vector<IPt>& p) {
  for (std::size_t k = 1; k < p.size(); ++k)
    if (p[k] == p[k - 1]) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = i + 1; j + 1 < p.size(); ++j) {
      if (j == i + 1) {
        if (folds_back(p[i], p[i + 1], p[j + 1])) return false;
      } else if (segments_meet(p[i], p[i + 1], p[j], p[j + 1])) {
        return false;
      }
    }
  return true;
}

// Bit mask of a w x h window, bit (j * w + i) for cell (i, j).
inline bool mask_has(std::uint64_t m, int w, int h, std::int64_t i, std::int64_t j) {
  return i >= 0 && j >= 0 && i < w && j < h && ((m >> (j * w + i)) & 1U);
}

// Closed membership of (x/4, y/4) in the union of unit cells.
inline bool mask_contains_q(std::uint64_t m, int w, int h, std::int64_t x4, std::int64_t y4) {
  auto cells = [](std::int64_t q) {
    std::int64_t lo = q >= 0 ? q / 4 : -((-q + 3) / 4);
    std::vector<std::int64_t> out{lo};
    if (q % 4 == 0) out.push_back(lo - 1);
    return out;
  };
  for (auto i : cells(x4))
    for (auto j : cells(y4))
      if (mask_has(m, w, h, i, j)) return true;
  return false;
}

// Samples every axis line on the quarter lattice at quarter steps; gaps in a
// union of closed unit intervals are at least one unit long, so each gap
// contains a sample.
inline bool region_sweep(std::uint64_t m, int w, int h) {
  for (int axis = 0; axis < 2; ++axis) {
    int extent = axis == 0 ? w : h, other = axis == 0 ? h : w;
    for (std::int64_t c = -2; c <= 4 * extent + 2; ++c) {
      int state = 0;  // 0 before, 1 inside, 2 after the run
      for (std::int64_t t = -4; t <= 4 * other + 4; ++t) {
        bool in = axis == 0 ? mask_contains_q(m, w, h, c, t) : mask_contains_q(m, w, h, t, c);
        if (in && state == 2) return false;
        if (in) state = 1;
        else if (state == 1) state = 2;
      }
    }
  }
  return true;
}

inline oc::GridRegion mask_region(std::uint64_t m, int w, int h) {
  std::vector<oc::Cell> cells;
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i)
      if (mask_has(m, w, h, i, j)) cells.push_back({i, j});
  return oc::GridRegion(Pt2{Rat(0), Rat(0)}, Rat(1), std::move(cells));
}

// Intersection of all supersets S with convex(S), for every mask of a
// `bits`-cell window, by a zeta transform over supersets.
inline std::vector<std::uint32_t> superset_intersections(int bits, const std::function<bool(std::uint32_t)>& convex) {
  std::uint32_t full = bits == 32 ? ~0U : ((1U << bits) - 1);
  std::vector<std::uint32_t> f(std::size_t{1} << bits);
  for (std::uint32_t m = 0; m <= full; ++m) f[m] = convex(m) ? m : full;
  for (int b = 0; b < bits; ++b)
    for (std::uint32_t m = 0; m <= full; ++m)
      if (!(m & (1U << b))) f[m] &= f[m | (1U << b)];
  return f;
}

// Closed-cell ortho-convexity of a cell mask over a box (cell (c0, c1, ...)
// at bit c0 + d0 * (c1 + d1 * ...)), sampled on the half lattice: axis lines
// through faces and cell interiors, sample points at half steps.
class BoxSweep {
 public:
  explicit BoxSweep(std::vector<int> dims) : dims_(std::move(dims)) {
    const std::size_t n = dims_.size();
    for (std::size_t axis = 0; axis < n; ++axis) {
      std::vector<int> q(n, 0);
      for (;;) {
        std::vector<std::uint64_t> line;
        for (int t = 0; t <= 2 * dims_[axis]; ++t) {
          q[axis] = t;
          line.push_back(cover(q));
        }
        lines_.push_back(std::move(line));
        std::size_t k = 0;
        for (; k < n; ++k) {
          if (k == axis) continue;
          if (++q[k] <= 2 * dims_[k]) break;
          q[k] = 0;
        }
        if (k == n) break;
      }
    }
  }

  bool convex(std::uint64_t m) const {
    for (const auto& line : lines_) {
      int state = 0;
      for (std::uint64_t c : line) {
        bool in = (m & c) != 0;
        if (in && state == 2) return false;
        if (in) state = 1;
        else if (state == 1) state = 2;
      }
    }
    return true;
  }

  // Closed cells touch when every index differs by at most one.
  bool connected(std::uint64_t m) const {
    if (m == 0) return true;
    const std::size_t n = dims_.size();
    int cells = 1;
    for (int d : dims_) cells *= d;
    auto coords = [&](int b) {
      std::vector<int> c(n);
      for (std::size_t k = 0; k < n; ++k) {
        c[k] = b % dims_[k];
        b /= dims_[k];
      }
      return c;
    };
    std::uint64_t seen = m & (~m + 1), frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (int a = 0; a < cells; ++a) {
        if (!((frontier >> a) & 1U)) continue;
        auto ca = coords(a);
        for (int b = 0; b < cells; ++b) {
          if (!((m >> b) & 1U) || ((seen >> b) & 1U)) continue;
          auto cb = coords(b);
          bool touch = true;
          for (std::size_t k = 0; k < n; ++k) touch &= std::abs(ca[k] - cb[k]) <= 1;
          if (touch) next |= std::uint64_t{1} << b;
        }
      }
      seen |= next;
      frontier = next;
    }
    return seen == m;
  }

 private:
  std::uint64_t cover(const std::vector<int>& q) const {
    std::uint64_t mask = 0;
    const std::size_t n = dims_.size();
    std::vector<int> c(n, 0);
    // cells whose closure contains the doubled position q
    std::vector<std::vector<int>> choice(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (q[k] % 2) choice[k] = {(q[k] - 1) / 2};
      else choice[k] = {q[k] / 2 - 1, q[k] / 2};
    }
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
      bool inside = true;
      int bit = 0, stride = 1;
      for (std::size_t k = 0; k < n; ++k) {
        int v = choice[k][pick[k]];
        inside &= v >= 0 && v < dims_[k];
        bit += v * stride;
        stride *= dims_[k];
      }
      if (inside) mask |= std::uint64_t{1} << bit;
      std::size_t k = 0;
      for (; k < n; ++k) {
        if (++pick[k] < choice[k].size()) break;
        pick[k] = 0;
      }
      if (k == n) break;
    }
    return mask;
  }

  std::vector<int> dims_;
  std::vector<std::vector<std::uint64_t>> lines_;
};

// Lattice-point ortho-convexity of a cell mask over a box (same bit layout as
// BoxSweep): cells are points and only lines through cell centres count.
class LineBits {
 public:
  explicit LineBits(const std::vector<int>& dims) {
    int total = 1;
    for (int d : dims) total *= d;
    int stride = 1;
    for (int e : dims) {
      Axis a{stride, e, {}, {}};
      for (int k = 0; k < e; ++k) {
        std::uint64_t geq = 0, lt = 0;
        for (int b = 0; b < total; ++b) {
          int c = (b / stride) % e;
          if (c >= k) geq |= std::uint64_t{1} << b;
          if (c < e - k) lt |= std::uint64_t{1} << b;
        }
        a.geq.push_back(geq);
        a.lt.push_back(lt);
      }
      axes_.push_back(std::move(a));
      stride *= e;
    }
  }

  // Empty cells with occupied cells on both sides along some axis line.
  std::uint64_t gaps(std::uint64_t m) const {
    std::uint64_t g = 0;
    for (const Axis& a : axes_) {
      std::uint64_t lower = 0, upper = 0;
      for (int k = 1; k < a.extent; ++k) {
        lower |= (m << (k * a.stride)) & a.geq[static_cast<std::size_t>(k)];
        upper |= (m >> (k * a.stride)) & a.lt[static_cast<std::size_t>(k)];
      }
      g |= lower & upper & ~m;
    }
    return g;
  }
  bool convex(std::uint64_t m) const { return gaps(m) == 0; }
  std::uint64_t fill(std::uint64_t m) const {
    for (std::uint64_t g = gaps(m); g; g = gaps(m)) m |= g;
    return m;
  }

 private:
  struct Axis {
    int stride, extent;
    std::vector<std::uint64_t> geq, lt;
  };
  std::vector<Axis> axes_;
};

inline oc::GridRegionN mask_region_n(std::uint64_t m, const std::vector<int>& dims) {
  std::vector<oc::IndexN> cells;
  int total = 1;
  for (int d : dims) total *= d;
  for (int b = 0; b < total; ++b) {
    if (!((m >> b) & 1U)) continue;
    oc::IndexN c;
    int r = b;
    for (int d : dims) {
      c.push_back(r % d);
      r /= d;
    }
    cells.push_back(std::move(c));
  }
  return oc::GridRegionN(dims.size(), std::move(cells));
}

inline std::uint64_t region_mask_n(const oc::GridRegionN& r, const std::vector<int>& dims) {
  std::uint64_t m = 0;
  for (const auto& c : r.cells()) {
    int bit = 0, stride = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      bit += static_cast<int>(c[k]) * stride;
      stride *= dims[k];
    }
    m |= std::uint64_t{1} << bit;
  }
  return m;
}

// Closed axis segment against a closed rectangle, exact.
inline bool segment_meets_rect(const Pt2& a, const Pt2& b, const oc::AxisRect& r) {
  Rat x0 = oc::min(a.x, b.x), x1 = oc::max(a.x, b.x), y0 = oc::min(a.y, b.y), y1 = oc::max(a.y, b.y);
  return x0 <= r.max().x && r.min().x <= x1 && y0 <= r.max().y && r.min().y <= y1;
}

// Pieces of a staircase line clipped to a box that contains every rectangle
// of interest: head ray, core segments, tail ray.
inline std::vector<std::pair<Pt2, Pt2>> line_pieces(const oc::StaircaseLine& l, const Rat& reach) {
  auto vs = l.vertices();
  std::vector<std::pair<Pt2, Pt2>> out;
  Pt2 h = oc::axis_dir_vector(l.head()), t = oc::axis_dir_vector(l.tail());
  out.push_back({vs.front(), vs.front() + reach * h});
  for (std::size_t k = 1; k < vs.size(); ++k) out.push_back({vs[k - 1], vs[k]});
  out.push_back({vs.back(), vs.back() + reach * t});
  return out;
}

// Strict separation checked cell by cell: no piece of the line touches a
// cell, and every cell centre lies on the expected side.
inline bool strictly_on_side(const oc::StaircaseLine& l, oc::Side side, const oc::GridRegion& r) {
  Rat reach(1000);
  auto pieces = line_pieces(l, reach);
  for (const auto& c : r.cells()) {
    oc::AxisRect q = r.cell_rect(c);
    for (const auto& [a, b] : pieces)
      if (segment_meets_rect(a, b, q)) return false;
    if (l.side_of(r.cell_center(c)) != side) return false;
  }
  return true;
}

inline bool strictly_on_side(const oc::StaircaseLine& l, oc::Side side, const Pt2& p) {
  for (const auto& [a, b] : line_pieces(l, Rat(1000)))
    if (segment_meets_rect(a, b, oc::AxisRect(p, p))) return false;
  return l.side_of(p) == side;
}

// Hyperbola pair S = {y = +-(x + 1/x), x > 0}. One axis line through p meets
// S in a segment containing p.
inline bool hyperbola_hull_member(const Pt2& p) {
  if (p.x.sign() <= 0) return false;
  Rat ay = oc::abs(p.y);
  bool vertical = ay <= p.x + Rat(1) / p.x;
  bool horizontal = p.x * p.x - ay * p.x + Rat(1) <= Rat(0);
  return vertical || horizontal;
}

// Largest t in [0, 1] with [u, u + t (w - u)] inside the staircase halfplane,
// given u inside. Halfplanes are closed and ortho-convex, so their trace on
// an axis segment is a closed interval and the exit point lies on the line.
inline Rat exit_parameter(const oc::StaircaseHalfplane& h, const Pt2& u, const Pt2& w) {
  if (oc::halfplane_contains(h, w)) return Rat(1);
  bool vertical = u.x == w.x;
  Rat len = vertical ? w.y - u.y : w.x - u.x;
  std::optional<Rat> best;
  for (const auto& [a, b] : line_pieces(h.line, Rat(10000))) {
    // Parameter range of piece-segment contact along u->w.
    Rat ax = vertical ? a.x : a.y, bx = vertical ? b.x : b.y;   // cross coordinate
    Rat ay = vertical ? a.y : a.x, by = vertical ? b.y : b.x;   // along coordinate
    Rat cu = vertical ? u.x : u.y, su = vertical ? u.y : u.x;
    if (cu < oc::min(ax, bx) || cu > oc::max(ax, bx)) continue;
    Rat lo, hi;
    if (ax == bx) {
      lo = oc::min(ay, by);
      hi = oc::max(ay, by);
    } else {
      lo = hi = ay;  // piece crosses the segment's supporting line at its own along-coordinate
    }
    for (const Rat& s : {lo, hi}) {
      Rat t = (s - su) / len;
      if (t.sign() >= 0 && t <= Rat(1) && (!best || *best < t)) best = t;
    }
    // Clipped overlap: the segment's own ends may lie inside [lo, hi].
    for (const Rat& t : {Rat(0), Rat(1)}) {
      Rat s = su + t * len;
      if (lo <= s && s <= hi && (!best || *best < t)) best = t;
    }
  }
  return best.value_or(Rat(0));
}

}  // namespace oracle
