#include "orthoconvex/regions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "orthoconvex/error.hpp"
#include "region_internal.hpp"

namespace oc {

// ---------------------------------------------------------------------------
// GridRegion

GridRegion::GridRegion(Pt2 origin, Rat cell, std::vector<Cell> cells) : cell_(std::move(cell)) {
  if (cell_.sign() <= 0) throw Error(ErrorCode::InvalidGeometry, "cell size must be positive, got " + cell_.str());
  std::int64_t kx = (origin.x / cell_).floor().to_int64();
  std::int64_t ky = (origin.y / cell_).floor().to_int64();
  origin_ = {origin.x - Rat(kx) * cell_, origin.y - Rat(ky) * cell_};
  for (Cell& c : cells) {
    c.i += kx;
    c.j += ky;
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  cells_ = std::move(cells);
}

bool GridRegion::has(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

std::optional<CellBox> GridRegion::index_box() const {
  if (cells_.empty()) return std::nullopt;
  CellBox b{cells_.front().i, cells_.front().j, cells_.back().i, cells_.front().j};
  for (const Cell& c : cells_) {
    b.jmin = std::min(b.jmin, c.j);
    b.jmax = std::max(b.jmax, c.j);
  }
  return b;
}

std::optional<AxisRect> GridRegion::bounds() const {
  auto b = index_box();
  if (!b) return std::nullopt;
  return AxisRect(lattice_point(b->imin, b->jmin), lattice_point(b->imax + 1, b->jmax + 1));
}

Pt2 GridRegion::lattice_point(std::int64_t i, std::int64_t j) const {
  return {origin_.x + Rat(i) * cell_, origin_.y + Rat(j) * cell_};
}

AxisRect GridRegion::cell_rect(Cell c) const { return AxisRect(lattice_point(c.i, c.j), lattice_point(c.i + 1, c.j + 1)); }

Pt2 GridRegion::cell_center(Cell c) const {
  Rat half = cell_ / Rat(2);
  Pt2 p = lattice_point(c.i, c.j);
  return {p.x + half, p.y + half};
}

namespace detail {

void candidate_indices(const Rat& coord, const Rat& origin, const Rat& cell, std::int64_t out[2], int& n) {
  Rat f = (coord - origin) / cell;
  Rat fl = f.floor();
  std::int64_t k = fl.to_int64();
  n = 0;
  if (fl == f) out[n++] = k - 1;
  out[n++] = k;
}

}  // namespace detail

bool GridRegion::contains(const Pt2& p) const {
  if (cells_.empty()) return false;
  std::int64_t is[2], js[2];
  int ni = 0, nj = 0;
  detail::candidate_indices(p.x, origin_.x, cell_, is, ni);
  detail::candidate_indices(p.y, origin_.y, cell_, js, nj);
  for (int a = 0; a < ni; ++a)
    for (int b = 0; b < nj; ++b)
      if (has({is[a], js[b]})) return true;
  return false;
}

GridRegion GridRegion::with_cells(std::vector<Cell> cells) const { return GridRegion(origin_, cell_, std::move(cells)); }

bool GridRegion::subset_of(const GridRegion& o) const {
  if (cells_.empty()) return true;
  if (!same_lattice(o)) return false;
  return std::includes(o.cells_.begin(), o.cells_.end(), cells_.begin(), cells_.end());
}

// ---------------------------------------------------------------------------
// RectilinearPolygon

namespace {

bool boxes_meet(const AxisRect& a, const AxisRect& b) { return a.intersects(b); }

}  // namespace

RectilinearPolygon::RectilinearPolygon(std::vector<Pt2> v) {
  v.erase(std::unique(v.begin(), v.end()), v.end());
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  // Drop vertices interior to a straight run; reject reversals.
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Pt2& a = v[(k + v.size() - 1) % v.size()];
      const Pt2& b = v[k];
      const Pt2& c = v[(k + 1) % v.size()];
      bool collinear_h = a.y == b.y && b.y == c.y;
      bool collinear_v = a.x == b.x && b.x == c.x;
      if (!collinear_h && !collinear_v) continue;
      Rat d1 = collinear_h ? b.x - a.x : b.y - a.y;
      Rat d2 = collinear_h ? c.x - b.x : c.y - b.y;
      if (d1.sign() != d2.sign())
        throw Error(ErrorCode::InvalidGeometry, "polygon boundary doubles back at " + b.str());
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
      changed = true;
      break;
    }
  }
  if (v.size() < 4) throw Error(ErrorCode::InvalidGeometry, "rectilinear polygon needs at least 4 vertices");
  const std::size_t n = v.size();
  std::vector<AxisRect> edges;
  edges.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Pt2& a = v[k];
    const Pt2& b = v[(k + 1) % n];
    if (a.x != b.x && a.y != b.y)
      throw Error(ErrorCode::InvalidGeometry, "edge " + a.str() + "-" + b.str() + " is not axis-parallel");
    edges.push_back(AxisRect::of_points(a, b));
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 2; l < n; ++l) {
      if (k == 0 && l == n - 1) continue;
      if (boxes_meet(edges[k], edges[l]))
        throw Error(ErrorCode::InvalidGeometry, "polygon boundary is not simple");
    }
  }
  vertices_ = std::move(v);
  if (area().sign() < 0) std::reverse(vertices_.begin(), vertices_.end());
}

Rat RectilinearPolygon::area() const {
  Rat twice(0);
  const std::size_t n = vertices_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Pt2& a = vertices_[k];
    const Pt2& b = vertices_[(k + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / Rat(2);
}

AxisRect RectilinearPolygon::bounds() const {
  Pt2 lo = vertices_.front(), hi = vertices_.front();
  for (const Pt2& p : vertices_) {
    lo = {min(lo.x, p.x), min(lo.y, p.y)};
    hi = {max(hi.x, p.x), max(hi.y, p.y)};
  }
  return AxisRect(lo, hi);
}

bool RectilinearPolygon::contains(const Pt2& p) const {
  const std::size_t n = vertices_.size();
  bool inside = false;
  for (std::size_t k = 0; k < n; ++k) {
    const Pt2& a = vertices_[k];
    const Pt2& b = vertices_[(k + 1) % n];
    if (AxisRect::of_points(a, b).contains(p)) return true;
    if (a.x == b.x) {
      const Rat& ylo = min(a.y, b.y);
      const Rat& yhi = max(a.y, b.y);
      if (ylo <= p.y && p.y < yhi && a.x > p.x) inside = !inside;
    }
  }
  return inside;
}

PointSet2::PointSet2(std::vector<Pt2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);
}

bool PointSet2::contains(const Pt2& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

// ---------------------------------------------------------------------------
// Connectivity and ortho-convexity

std::vector<GridRegion> connected_components(const GridRegion& r) {
  std::span<const Cell> cells = r.cells();
  std::vector<int> comp(cells.size(), -1);
  auto index_of = [&](Cell c) -> std::ptrdiff_t {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) return -1;
    return it - cells.begin();
  };
  std::vector<GridRegion> out;
  int ncomp = 0;
  for (std::size_t s = 0; s < cells.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Cell> members;
    std::deque<std::size_t> queue{s};
    comp[s] = ncomp;
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      members.push_back(cells[k]);
      for (std::int64_t di = -1; di <= 1; ++di)
        for (std::int64_t dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          std::ptrdiff_t nb = index_of({cells[k].i + di, cells[k].j + dj});
          if (nb >= 0 && comp[static_cast<std::size_t>(nb)] < 0) {
            comp[static_cast<std::size_t>(nb)] = ncomp;
            queue.push_back(static_cast<std::size_t>(nb));
          }
        }
    }
    out.push_back(r.with_cells(std::move(members)));
    ++ncomp;
  }
  return out;
}

bool is_path_connected(const GridRegion& r) { return connected_components(r).size() <= 1; }

namespace {

struct Run {
  std::int64_t lo, hi, count;
};

// Every line along one axis: runs must be contiguous, and the lattice line
// between two consecutive nonempty rows sees the union of both runs.
bool lines_connected(const std::map<std::int64_t, Run>& rows) {
  const Run* prev = nullptr;
  std::int64_t prev_key = 0;
  for (const auto& [key, run] : rows) {
    if (run.count != run.hi - run.lo + 1) return false;
    if (prev != nullptr && key == prev_key + 1) {
      if (run.lo > prev->hi + 1 || prev->lo > run.hi + 1) return false;
    }
    prev = &run;
    prev_key = key;
  }
  return true;
}

void add(std::map<std::int64_t, Run>& m, std::int64_t key, std::int64_t v) {
  auto [it, inserted] = m.try_emplace(key, Run{v, v, 1});
  if (!inserted) {
    it->second.lo = std::min(it->second.lo, v);
    it->second.hi = std::max(it->second.hi, v);
    ++it->second.count;
  }
}

}  // namespace

bool is_ortho_convex_region(const GridRegion& r) {
  std::map<std::int64_t, Run> rows, cols;
  for (const Cell& c : r.cells()) {
    add(rows, c.j, c.i);
    add(cols, c.i, c.j);
  }
  return lines_connected(rows) && lines_connected(cols);
}

std::optional<ColumnProfile> column_profile(const GridRegion& r) {
  if (r.empty()) return std::nullopt;
  ColumnProfile p;
  std::span<const Cell> cells = r.cells();
  p.imin = cells.front().i;
  std::size_t k = 0;
  while (k < cells.size()) {
    std::int64_t i = cells[k].i;
    if (i != p.imin + static_cast<std::int64_t>(p.bottom.size())) return std::nullopt;
    std::int64_t lo = cells[k].j, hi = cells[k].j;
    ++k;
    while (k < cells.size() && cells[k].i == i) {
      if (cells[k].j != hi + 1) return std::nullopt;
      hi = cells[k].j;
      ++k;
    }
    p.bottom.push_back(lo);
    p.top.push_back(hi + 1);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Rasterisation

GridRegion polygon_to_region(const RectilinearPolygon& poly, const Rat& cell) {
  if (cell.sign() <= 0) throw Error(ErrorCode::NonAlignedCell, "cell size must be positive");
  AxisRect box = poly.bounds();
  for (const Pt2& v : poly.vertices()) {
    if (!((v.x - box.min().x) / cell).is_integer() || !((v.y - box.min().y) / cell).is_integer())
      throw Error(ErrorCode::NonAlignedCell, "cell " + cell.str() + " does not divide vertex " + v.str());
  }
  const std::int64_t ny = (box.height() / cell).to_int64();
  std::span<const Pt2> vs = poly.vertices();
  std::vector<Cell> cells;
  for (std::int64_t j = 0; j < ny; ++j) {
    Rat yc = box.min().y + (Rat(j) + Rat(1, 2)) * cell;
    std::vector<Rat> xs;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const Pt2& a = vs[k];
      const Pt2& b = vs[(k + 1) % vs.size()];
      if (a.x != b.x) continue;
      if (min(a.y, b.y) < yc && yc < max(a.y, b.y)) xs.push_back(a.x);
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      std::int64_t i0 = ((xs[k] - box.min().x) / cell).to_int64();
      std::int64_t i1 = ((xs[k + 1] - box.min().x) / cell).to_int64();
      for (std::int64_t i = i0; i < i1; ++i) cells.push_back({i, j});
    }
  }
  return GridRegion(box.min(), cell, std::move(cells));
}

// ---------------------------------------------------------------------------
// Boundary and distances

namespace detail {

std::vector<IdxSeg> boundary_idx_segments(const GridRegion& r) {
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>> hor, ver;
  for (const Cell& c : r.cells()) {
    if (!r.has({c.i, c.j - 1})) hor[c.j].push_back({c.i, c.i + 1});
    if (!r.has({c.i, c.j + 1})) hor[c.j + 1].push_back({c.i, c.i + 1});
    if (!r.has({c.i - 1, c.j})) ver[c.i].push_back({c.j, c.j + 1});
    if (!r.has({c.i + 1, c.j})) ver[c.i + 1].push_back({c.j, c.j + 1});
  }
  std::vector<IdxSeg> out;
  auto merge = [&](auto& lines, bool horizontal) {
    for (auto& [line, spans] : lines) {
      std::sort(spans.begin(), spans.end());
      std::int64_t lo = spans.front().first, hi = spans.front().second;
      auto emit = [&]() {
        if (horizontal) out.push_back({lo, line, hi, line});
        else out.push_back({line, lo, line, hi});
      };
      for (std::size_t k = 1; k < spans.size(); ++k) {
        if (spans[k].first <= hi) {
          hi = std::max(hi, spans[k].second);
        } else {
          emit();
          lo = spans[k].first;
          hi = spans[k].second;
        }
      }
      emit();
    }
  };
  merge(hor, true);
  merge(ver, false);
  return out;
}

bool lattice_point_in(const GridRegion& r, std::int64_t x, std::int64_t y) {
  return r.has({x - 1, y - 1}) || r.has({x, y - 1}) || r.has({x - 1, y}) || r.has({x, y});
}

std::vector<AxisRect> boundary_rects(const GridRegion& r) {
  std::vector<AxisRect> out;
  for (const IdxSeg& s : boundary_idx_segments(r))
    out.push_back(AxisRect(r.lattice_point(s.x0, s.y0), r.lattice_point(s.x1, s.y1)));
  return out;
}

GridRegion touched_cells(const GridRegion& r, const Pt2& anchor, const Rat& pitch) {
  if (pitch.sign() <= 0) throw Error(ErrorCode::PreconditionViolated, "grid pitch must be positive");
  std::vector<Cell> cells;
  for (const Cell& c : r.cells()) {
    AxisRect box = r.cell_rect(c);
    std::int64_t i0 = ((box.min().x - anchor.x) / pitch).ceil().to_int64() - 1;
    std::int64_t i1 = ((box.max().x - anchor.x) / pitch).floor().to_int64();
    std::int64_t j0 = ((box.min().y - anchor.y) / pitch).ceil().to_int64() - 1;
    std::int64_t j1 = ((box.max().y - anchor.y) / pitch).floor().to_int64();
    for (std::int64_t i = i0; i <= i1; ++i)
      for (std::int64_t j = j0; j <= j1; ++j) cells.push_back({i, j});
  }
  return GridRegion(anchor, pitch, std::move(cells));
}

}  // namespace detail

std::vector<AxisSegment> boundary_segments(const GridRegion& r) {
  std::vector<AxisSegment> out;
  for (const detail::IdxSeg& s : detail::boundary_idx_segments(r))
    out.emplace_back(r.lattice_point(s.x0, s.y0), r.lattice_point(s.x1, s.y1));
  return out;
}

namespace {

std::int64_t gap_i(std::int64_t lo1, std::int64_t hi1, std::int64_t lo2, std::int64_t hi2) {
  if (hi1 < lo2) return lo2 - hi1;
  if (hi2 < lo1) return lo1 - hi2;
  return 0;
}

void require_nonempty(bool empty_a, bool empty_b) {
  if (empty_a || empty_b) throw Error(ErrorCode::EmptyInput, "distance needs two nonempty sets");
}

// Minimum of f(k) over k in [0, n), evaluated in parallel.
template <class F>
Rat parallel_min(std::size_t n, F f) {
  std::vector<std::optional<Rat>> best(static_cast<std::size_t>(omp_max_threads()));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    Rat v = f(static_cast<std::size_t>(k));
    auto& slot = best[static_cast<std::size_t>(omp_thread_id())];
    if (!slot || v < *slot) slot = std::move(v);
  }
  std::optional<Rat> out;
  for (auto& b : best)
    if (b && (!out || *b < *out)) out = *b;
  return *out;
}

}  // namespace

Rat region_distance_sq(const GridRegion& a, const GridRegion& b) {
  require_nonempty(a.empty(), b.empty());
  if (a.same_lattice(b)) {
    auto sa = detail::boundary_idx_segments(a);
    auto sb = detail::boundary_idx_segments(b);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for reduction(min : best) schedule(static) if (sa.size() * sb.size() > 4096)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(sa.size()); ++k) {
      std::int64_t local = std::numeric_limits<std::int64_t>::max();
      const auto& s = sa[static_cast<std::size_t>(k)];
      for (const auto& t : sb) {
        std::int64_t dx = gap_i(s.x0, s.x1, t.x0, t.x1);
        std::int64_t dy = gap_i(s.y0, s.y1, t.y0, t.y1);
        local = std::min(local, dx * dx + dy * dy);
      }
      best = std::min(best, local);
    }
    if (best == 0) return Rat(0);
    for (const auto& s : sa)
      if (detail::lattice_point_in(b, s.x0, s.y0)) return Rat(0);
    for (const auto& t : sb)
      if (detail::lattice_point_in(a, t.x0, t.y0)) return Rat(0);
    return Rat(best) * a.cell() * a.cell();
  }
  auto ra = detail::boundary_rects(a);
  auto rb = detail::boundary_rects(b);
  Rat best = parallel_min(ra.size(), [&](std::size_t k) {
    Rat local = rect_distance_sq(ra[k], rb.front());
    for (std::size_t l = 1; l < rb.size(); ++l) local = min(local, rect_distance_sq(ra[k], rb[l]));
    return local;
  });
  if (best.sign() == 0) return best;
  for (const AxisRect& s : ra)
    if (b.contains(s.min())) return Rat(0);
  for (const AxisRect& t : rb)
    if (a.contains(t.min())) return Rat(0);
  return best;
}

Rat region_distance_sq(const PointSet2& a, const GridRegion& b) {
  require_nonempty(a.empty(), b.empty());
  auto rb = detail::boundary_rects(b);
  Rat best = parallel_min(a.points().size(), [&](std::size_t k) {
    const Pt2& p = a.points()[k];
    if (b.contains(p)) return Rat(0);
    Rat local = point_rect_distance_sq(p, rb.front());
    for (std::size_t l = 1; l < rb.size(); ++l) local = min(local, point_rect_distance_sq(p, rb[l]));
    return local;
  });
  return best;
}

Rat region_distance_sq(const GridRegion& a, const PointSet2& b) { return region_distance_sq(b, a); }

Rat region_distance_sq(const PointSet2& a, const PointSet2& b) {
  require_nonempty(a.empty(), b.empty());
  return parallel_min(a.points().size(), [&](std::size_t k) {
    Rat local = norm2_sq(a.points()[k], b.points().front());
    for (const Pt2& q : b.points()) local = min(local, norm2_sq(a.points()[k], q));
    return local;
  });
}

Rat region_distance_sq_reference(const GridRegion& a, const GridRegion& b) {
  require_nonempty(a.empty(), b.empty());
  std::optional<Rat> best;
  for (const Cell& ca : a.cells()) {
    AxisRect ra = a.cell_rect(ca);
    for (const Cell& cb : b.cells()) {
      Rat d = rect_distance_sq(ra, b.cell_rect(cb));
      if (!best || d < *best) best = d;
    }
  }
  return *best;
}

Rat point_region_distance_sq(const Pt2& p, const GridRegion& r) {
  return region_distance_sq(PointSet2({p}), r);
}

}  // namespace oc
