#include "orthoconvex/limits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <random>

#include "orthoconvex/error.hpp"
#include "parallel.hpp"
#include "region_internal.hpp"

namespace oc {

namespace {

// Exact squared distance from points to a closed cell union.
class RegionField {
 public:
  explicit RegionField(const GridRegion& r) : r_(r), boundary_(detail::boundary_rects(r)) {}
  Rat dist_sq(const Pt2& p) const {
    if (r_.contains(p)) return Rat(0);
    Rat best = point_rect_distance_sq(p, boundary_.front());
    for (std::size_t k = 1; k < boundary_.size(); ++k) best = min(best, point_rect_distance_sq(p, boundary_[k]));
    return best;
  }

 private:
  const GridRegion& r_;
  std::vector<AxisRect> boundary_;
};

Rat sample_pitch(const GridRegion& r, const Rat& refine) {
  Rat per = (r.cell() / refine).ceil();
  return r.cell() / per;
}

Rat cell_max_sq(const GridRegion& a, const Cell& c, const Rat& pitch, const RegionField& b) {
  const std::int64_t k = (a.cell() / pitch).to_int64();
  Pt2 base = a.lattice_point(c.i, c.j);
  Rat best(0);
  for (std::int64_t u = 0; u <= k; ++u)
    for (std::int64_t v = 0; v <= k; ++v) {
      Rat d = b.dist_sq({base.x + Rat(u) * pitch, base.y + Rat(v) * pitch});
      if (d > best) best = d;
    }
  return best;
}

// sup over a's samples of d(x, b)^2. Cells whose upper bound cannot beat the
// corner maximum are skipped.
Rat directed_sq(const GridRegion& a, const RegionField& b, const Rat& pitch) {
  auto cells = a.cells();
  const std::size_t n = cells.size();
  std::vector<Rat> lb(n), ub(n);
  const Rat half_diag = Rat(3, 4) * a.cell();
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    AxisRect box = a.cell_rect(cells[idx]);
    Pt2 corners[4] = {box.min(), {box.max().x, box.min().y}, box.max(), {box.min().x, box.max().y}};
    Rat m(0);
    for (const Pt2& p : corners) m = max(m, b.dist_sq(p));
    lb[idx] = m;
    Rat r = rat_sqrt_upper(b.dist_sq(a.cell_center(cells[idx])), pitch) + half_diag;
    ub[idx] = r * r;
  }
  Rat floor_sq(0);
  for (const Rat& v : lb) floor_sq = max(floor_sq, v);
  std::vector<Rat> full(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    full[idx] = ub[idx] > floor_sq ? cell_max_sq(a, cells[idx], pitch, b) : Rat(0);
  }
  for (const Rat& v : full) floor_sq = max(floor_sq, v);
  return floor_sq;
}

Rat directed_sq_reference(const GridRegion& a, const RegionField& b, const Rat& pitch) {
  Rat best(0);
  for (const Cell& c : a.cells()) best = max(best, cell_max_sq(a, c, pitch, b));
  return best;
}

HausdorffDist certify(const Rat& max_sq, const Rat& pitch, const Rat& slack) {
  RatInterval r = sqrt_bracket(max_sq, pitch / Rat(64));
  return {r.lo, r.hi + slack, pitch};
}

void require_pair(bool ea, bool eb, const Rat& refine) {
  if (ea || eb) throw Error(ErrorCode::EmptyInput, "Hausdorff distance needs nonempty sets");
  if (refine.sign() <= 0) throw Error(ErrorCode::PreconditionViolated, "refine must be positive");
}

Rat point_segment_dist_sq(const Pt2& p, const Pt2& a, const Pt2& b) {
  Pt2 d = b - a;
  Rat len = d.x * d.x + d.y * d.y;
  if (len.sign() == 0) return norm2_sq(p, a);
  Rat t = ((p.x - a.x) * d.x + (p.y - a.y) * d.y) / len;
  t = max(Rat(0), min(Rat(1), t));
  return norm2_sq(p, a + t * d);
}

Rat point_polyline_dist_sq(const Pt2& p, const Polyline& g) {
  auto pts = g.points();
  if (pts.size() == 1) return norm2_sq(p, pts[0]);
  Rat best = point_segment_dist_sq(p, pts[0], pts[1]);
  for (std::size_t k = 2; k < pts.size(); ++k) best = min(best, point_segment_dist_sq(p, pts[k - 1], pts[k]));
  return best;
}

std::vector<Pt2> polyline_samples(const Polyline& g, const Rat& refine) {
  auto pts = g.points();
  std::vector<Pt2> out{pts[0]};
  for (std::size_t k = 1; k < pts.size(); ++k) {
    Pt2 d = pts[k] - pts[k - 1];
    std::int64_t m = (norm1(pts[k - 1], pts[k]) / refine).ceil().to_int64();
    for (std::int64_t s = 1; s <= m; ++s) out.push_back(pts[k - 1] + Rat(s, m) * d);
  }
  return out;
}

Rat directed_sq(const Polyline& a, const Polyline& b, const Rat& refine) {
  std::vector<Pt2> samples = polyline_samples(a, refine);
  std::vector<Rat> d(samples.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(samples.size()); ++k)
    d[static_cast<std::size_t>(k)] = point_polyline_dist_sq(samples[static_cast<std::size_t>(k)], b);
  return *std::max_element(d.begin(), d.end());
}

}  // namespace

HausdorffDist hausdorff(const GridRegion& a, const GridRegion& b, const Rat& refine) {
  require_pair(a.empty(), b.empty(), refine);
  Rat pa = sample_pitch(a, refine), pb = sample_pitch(b, refine);
  RegionField fa(a), fb(b);
  Rat m = max(directed_sq(a, fb, pa), directed_sq(b, fa, pb));
  Rat pitch = max(pa, pb);
  return certify(m, pitch, Rat(3, 4) * pitch);
}

HausdorffDist hausdorff_reference(const GridRegion& a, const GridRegion& b, const Rat& refine) {
  require_pair(a.empty(), b.empty(), refine);
  Rat pa = sample_pitch(a, refine), pb = sample_pitch(b, refine);
  RegionField fa(a), fb(b);
  Rat m = max(directed_sq_reference(a, fb, pa), directed_sq_reference(b, fa, pb));
  Rat pitch = max(pa, pb);
  return certify(m, pitch, Rat(3, 4) * pitch);
}

HausdorffDist hausdorff(const Polyline& a, const Polyline& b, const Rat& refine) {
  require_pair(false, false, refine);
  Rat m = max(directed_sq(a, b, refine), directed_sq(b, a, refine));
  return certify(m, refine, refine / Rat(2));
}

// ---------------------------------------------------------------------------
// Shortest paths

bool segment_in_region(const GridRegion& s, const Pt2& u, const Pt2& v) {
  // Split [u,v] at every lattice line it crosses; each piece then lies in one
  // closed cell, so its ends and midpoint decide it.
  std::vector<Rat> ts{Rat(0), Rat(1)};
  Pt2 d = v - u;
  auto crossings = [&](const Rat& from, const Rat& delta, const Rat& origin) {
    if (delta.sign() == 0) return;
    Rat lo = min(from, from + delta), hi = max(from, from + delta);
    Rat k = ((lo - origin) / s.cell()).ceil();
    for (Rat x = origin + k * s.cell(); x <= hi; x += s.cell()) ts.push_back((x - from) / delta);
  };
  crossings(u.x, d.x, s.origin().x);
  crossings(u.y, d.y, s.origin().y);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (!s.contains(u + ts[k] * d)) return false;
    if (k + 1 < ts.size() && !s.contains(u + ((ts[k] + ts[k + 1]) / Rat(2)) * d)) return false;
  }
  return true;
}

Polyline shortest_ortho_path(const GridRegion& s, const Pt2& a, const Pt2& b) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "region is empty");
  if (!is_path_connected(s)) throw Error(ErrorCode::NotPathConnected, "region is not path-connected");
  if (!is_ortho_convex_region(s)) throw Error(ErrorCode::NotOrthoConvex, "region is not ortho-convex");
  if (!s.contains(a)) throw Error(ErrorCode::PointOutside, "point " + a.str() + " is outside the region");
  if (!s.contains(b)) throw Error(ErrorCode::PointOutside, "point " + b.str() + " is outside the region");
  if (a == b) return Polyline({a});
  std::vector<Pt2> nodes{a, b};
  // Lattice points where the boundary turns or pinches.
  for (const auto& c : s.cells())
    for (std::int64_t x = c.i; x <= c.i + 1; ++x)
      for (std::int64_t y = c.j; y <= c.j + 1; ++y) {
        bool sw = s.has({x - 1, y - 1}), se = s.has({x, y - 1}), nw = s.has({x - 1, y}), ne = s.has({x, y});
        int count = sw + se + nw + ne;
        bool straight = count == 2 && sw != ne;
        if (count != 4 && !straight) nodes.push_back(s.lattice_point(x, y));
      }
  std::sort(nodes.begin() + 2, nodes.end());
  nodes.erase(std::unique(nodes.begin() + 2, nodes.end()), nodes.end());
  const std::size_t n = nodes.size();
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (nodes[i] == nodes[j] || !segment_in_region(s, nodes[i], nodes[j])) continue;
      double w = std::sqrt(norm2_sq(nodes[i], nodes[j]).to_double());
      adj[i].push_back({j, w});
      adj[j].push_back({i, w});
    }
  std::vector<double> dist(n, INFINITY);
  std::vector<std::size_t> prev(n, n);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (auto [v, w] : adj[u])
      if (d + w < dist[v]) {
        dist[v] = d + w;
        prev[v] = u;
        pq.push({dist[v], v});
      }
  }
  if (prev[1] == n) throw Error(ErrorCode::ConstructionFailed, "visibility graph does not join the endpoints");
  std::vector<Pt2> path;
  for (std::size_t v = 1; v != n; v = prev[v]) path.push_back(nodes[v]);
  std::reverse(path.begin(), path.end());
  Polyline out(std::move(path));
  if (!is_ortho_convex_path(out)) {
    std::string pts;
    for (const auto& p : out.points()) pts += p.str();
    throw Error(ErrorCode::ConstructionFailed, "shortest path " + pts + " is not monotone");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Convergence

std::vector<ConvergenceRow> path_convergence_report(const Pt2& a, const Pt2& b, std::int64_t n_max,
                                                    std::uint64_t seed) {
  if (a.x != b.x && a.y != b.y)
    throw Error(ErrorCode::NotAxisAligned, "segment " + a.str() + "-" + b.str() + " is not axis-aligned");
  if (n_max < 1) throw Error(ErrorCode::PreconditionViolated, "n_max must be at least 1");
  if (a == b) throw Error(ErrorCode::PreconditionViolated, "segment endpoints coincide");
  const Pt2 dir{Rat((b.x - a.x).sign()), Rat((b.y - a.y).sign())};
  const Pt2 normal{-dir.y, dir.x};
  std::mt19937_64 rng(seed);
  const Polyline target({a, b});
  std::vector<ConvergenceRow> rows;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    Rat inv(1, n);
    // inward along the segment, to opposite sides across it
    Pt2 an = a + inv * (dir + normal);
    Pt2 bn = b - inv * (dir + normal);
    std::size_t k = 1 + rng() % 4;
    std::vector<Rat> tx, ty;
    for (std::size_t i = 0; i < k; ++i) {
      tx.push_back(Rat(static_cast<std::int64_t>(rng() % 1024), 1024));
      ty.push_back(Rat(static_cast<std::int64_t>(rng() % 1024), 1024));
    }
    std::sort(tx.begin(), tx.end());
    std::sort(ty.begin(), ty.end());
    std::vector<Pt2> pts{an};
    for (std::size_t i = 0; i < k; ++i) pts.push_back({an.x + tx[i] * (bn.x - an.x), an.y + ty[i] * (bn.y - an.y)});
    pts.push_back(bn);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Polyline path(std::move(pts));
    ConvergenceRow row{n,
                       path,
                       path_length(path, Rat(1, 1000000) * inv),
                       norm2_sq(an, bn),
                       norm1(an, bn),
                       check_sandwich(path),
                       Rat(2) * inv,
                       hausdorff(path, target, inv / Rat(4)),
                       Rat(7, 4) * inv};
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Blaschke selection

BlaschkeResult blaschke_select(const SetSequence& seq, const std::vector<Rat>& schedule) {
  if (schedule.empty()) throw Error(ErrorCode::PreconditionViolated, "tolerance schedule is empty");
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (schedule[k].sign() <= 0) throw Error(ErrorCode::PreconditionViolated, "tolerances must be positive");
    if (k > 0 && !(schedule[k] < schedule[k - 1]))
      throw Error(ErrorCode::PreconditionViolated, "tolerances must strictly decrease");
  }
  for (std::size_t i = 0; i < seq.items.size(); ++i) {
    const GridRegion& r = seq.items[i];
    std::string at = "item " + std::to_string(i);
    if (r.empty()) throw Error(ErrorCode::PreconditionViolated, at + " is empty");
    if (!is_path_connected(r)) throw Error(ErrorCode::PreconditionViolated, at + " is not path-connected");
    if (!is_ortho_convex_region(r)) throw Error(ErrorCode::PreconditionViolated, at + " is not ortho-convex");
    AxisRect box = *r.bounds();
    if (!seq.bound.contains(box.min()) || !seq.bound.contains(box.max()))
      throw Error(ErrorCode::PreconditionViolated, at + " leaves the bounding box");
  }
  if (seq.items.size() < 2) throw Error(ErrorCode::InsufficientItems, "need at least two items");

  BlaschkeResult out;
  std::vector<std::size_t> alive(seq.items.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  GridRegion key_region;
  for (const Rat& tol : schedule) {
    std::vector<GridRegion> keys(alive.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(alive.size()); ++k)
      keys[static_cast<std::size_t>(k)] =
          detail::touched_cells(seq.items[alive[static_cast<std::size_t>(k)]], seq.bound.min(), tol);
    std::map<std::vector<Cell>, std::vector<std::size_t>> buckets;
    for (std::size_t k = 0; k < alive.size(); ++k) {
      auto cells = keys[k].cells();
      buckets[std::vector<Cell>(cells.begin(), cells.end())].push_back(k);
    }
    const std::vector<std::size_t>* best = nullptr;
    for (const auto& [key, members] : buckets)
      if (best == nullptr || members.size() > best->size() ||
          (members.size() == best->size() && members.front() < best->front()))
        best = &members;
    if (best->size() < 2)
      throw Error(ErrorCode::InsufficientItems, "fewer than two items agree at tolerance " + tol.str());
    key_region = keys[best->front()];
    std::vector<std::size_t> next;
    for (std::size_t k : *best) next.push_back(alive[k]);
    alive = std::move(next);

    BlaschkeLevel level{tol, alive, Rat(0)};
    std::vector<Rat> his(alive.size() - 1);
    const auto pairs = static_cast<std::ptrdiff_t>(alive.size()) - 1;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < pairs; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      his[idx] = hausdorff(seq.items[alive[idx]], seq.items[alive[idx + 1]], tol / Rat(4)).hi;
    }
    for (const Rat& h : his) level.max_successive_hi = max(level.max_successive_hi, h);
    out.levels.push_back(std::move(level));
  }
  out.indices = alive;
  out.limit_candidate = key_region;
  out.limit_ortho_convex = is_ortho_convex_region(key_region);
  return out;
}

bool closure_preserves(const GridRegion& r) { return is_path_connected(r) && is_ortho_convex_region(r); }

// ---------------------------------------------------------------------------
// Segment sets with open ends

namespace {

struct Piece {
  Rat lo, hi;
  bool lo_closed, hi_closed;
};

// Intersection of one segment with a line, along the line's free coordinate.
std::optional<Piece> cut(const EndpointSegment& s, const AxisLine& line) {
  auto fixed = [&](const Pt2& p) -> const Rat& { return line.vertical ? p.x : p.y; };
  auto free = [&](const Pt2& p) -> const Rat& { return line.vertical ? p.y : p.x; };
  const Rat& fp = fixed(s.p);
  const Rat& fq = fixed(s.q);
  if (fp == fq) {
    if (fp != line.value) return std::nullopt;
    bool p_low = free(s.p) <= free(s.q);
    Piece pc{min(free(s.p), free(s.q)), max(free(s.p), free(s.q)), p_low ? s.p_closed : s.q_closed,
             p_low ? s.q_closed : s.p_closed};
    if (pc.lo == pc.hi && !(s.p_closed && s.q_closed)) return std::nullopt;
    return pc;
  }
  Rat lo = min(fp, fq), hi = max(fp, fq);
  if (line.value < lo || line.value > hi) return std::nullopt;
  if (line.value == fp && !s.p_closed) return std::nullopt;
  if (line.value == fq && !s.q_closed) return std::nullopt;
  return Piece{free(s.p), free(s.p), true, true};
}

bool connected(std::vector<Piece> pieces) {
  if (pieces.empty()) return true;
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  Rat reach = pieces[0].hi;
  bool reach_closed = pieces[0].hi_closed;
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    const Piece& p = pieces[k];
    if (p.lo > reach || (p.lo == reach && !reach_closed && !p.lo_closed)) return false;
    if (p.hi > reach) {
      reach = p.hi;
      reach_closed = p.hi_closed;
    } else if (p.hi == reach) {
      reach_closed = reach_closed || p.hi_closed;
    }
  }
  return true;
}

std::vector<Rat> probe_values(std::vector<Rat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Rat> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(v[k]);
    if (k + 1 < v.size()) out.push_back((v[k] + v[k + 1]) / Rat(2));
  }
  return out;
}

}  // namespace

std::vector<AxisLine> failing_lines(const std::vector<EndpointSegment>& set) {
  std::vector<Rat> xs, ys;
  for (const EndpointSegment& s : set) {
    if (s.p.x != s.q.x && s.p.y != s.q.y)
      throw Error(ErrorCode::NotAxisAligned, "segment " + s.p.str() + "-" + s.q.str() + " is not axis-aligned");
    xs.push_back(s.p.x);
    xs.push_back(s.q.x);
    ys.push_back(s.p.y);
    ys.push_back(s.q.y);
  }
  std::vector<AxisLine> failing;
  for (bool vertical : {true, false}) {
    for (const Rat& value : probe_values(vertical ? xs : ys)) {
      AxisLine line{vertical, value};
      std::vector<Piece> pieces;
      for (const EndpointSegment& s : set)
        if (auto pc = cut(s, line)) pieces.push_back(*pc);
      if (!connected(pieces)) failing.push_back(line);
    }
  }
  return failing;
}

std::vector<EndpointSegment> closure(std::vector<EndpointSegment> set) {
  for (EndpointSegment& s : set) s.p_closed = s.q_closed = true;
  return set;
}

}  // namespace oc
