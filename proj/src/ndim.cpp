#include "orthoconvex/ndim.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "orthoconvex/error.hpp"
#include "parallel.hpp"

namespace oc {

GridRegionN::GridRegionN(std::size_t dim, std::vector<IndexN> cells)
    : GridRegionN(dim, PtN{std::vector<Rat>(dim, Rat(0))}, Rat(1), std::move(cells)) {}

GridRegionN::GridRegionN(std::size_t dim, PtN origin, Rat cell, std::vector<IndexN> cells)
    : dim_(dim), origin_(std::move(origin)), cell_(std::move(cell)), cells_(std::move(cells)) {
  if (dim_ == 0) throw Error(ErrorCode::InvalidGeometry, "dimension must be at least 1");
  if (origin_.coords.size() != dim_) throw Error(ErrorCode::InvalidGeometry, "origin arity differs from dim");
  if (cell_.sign() <= 0) throw Error(ErrorCode::InvalidGeometry, "cell size must be positive");
  for (const IndexN& c : cells_)
    if (c.size() != dim_) throw Error(ErrorCode::InvalidGeometry, "cell index arity differs from dim");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool GridRegionN::has(const IndexN& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

GridRegionN GridRegionN::with_cells(std::vector<IndexN> cells) const {
  return GridRegionN(dim_, origin_, cell_, std::move(cells));
}

GridRegionN to_region_n(const GridRegion& r) {
  std::vector<IndexN> cells;
  for (const Cell& c : r.cells()) cells.push_back({c.i, c.j});
  return GridRegionN(2, PtN{{r.origin().x, r.origin().y}}, r.cell(), std::move(cells));
}

namespace {

// Occupancy over the bounding box, with a one-cell empty margin so face
// positions at the box edge read as empty neighbours.
struct Dense {
  std::size_t n = 0;
  IndexN lo, ext, stride;
  std::vector<unsigned char> bits;

  explicit Dense(const GridRegionN& r) : n(r.dim()) {
    lo.assign(n, 0);
    ext.assign(n, 1);
    if (!r.empty()) {
      IndexN hi = r.cells().front();
      lo = hi;
      for (const IndexN& c : r.cells())
        for (std::size_t k = 0; k < n; ++k) {
          lo[k] = std::min(lo[k], c[k]);
          hi[k] = std::max(hi[k], c[k]);
        }
      for (std::size_t k = 0; k < n; ++k) {
        lo[k] -= 1;
        ext[k] = hi[k] - lo[k] + 2;
      }
    }
    stride.assign(n, 1);
    for (std::size_t k = 1; k < n; ++k) stride[k] = stride[k - 1] * ext[k - 1];
    bits.assign(static_cast<std::size_t>(stride[n - 1] * ext[n - 1]), 0);
    for (const IndexN& c : r.cells()) bits[offset(c)] = 1;
  }
  std::size_t offset(const IndexN& c) const {
    std::int64_t o = 0;
    for (std::size_t k = 0; k < n; ++k) o += (c[k] - lo[k]) * stride[k];
    return static_cast<std::size_t>(o);
  }
  // local coordinates
  bool at(const IndexN& local) const {
    std::int64_t o = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (local[k] < 0 || local[k] >= ext[k]) return false;
      o += local[k] * stride[k];
    }
    return bits[static_cast<std::size_t>(o)] != 0;
  }
};

// Odometer over all vectors v with 0 <= v[k] < lim[k] for k != skip.
template <class F>
void for_each_position(const IndexN& lim, std::size_t skip, F f) {
  const std::size_t n = lim.size();
  IndexN v(n, 0);
  for (;;) {
    f(v);
    std::size_t k = 0;
    for (; k < n; ++k) {
      if (k == skip) continue;
      if (++v[k] < lim[k]) break;
      v[k] = 0;
    }
    if (k == n) return;
  }
}

bool contiguous(const std::vector<unsigned char>& m) {
  auto first = std::find(m.begin(), m.end(), 1);
  if (first == m.end()) return true;
  auto last = std::find(m.rbegin(), m.rend(), 1).base();
  return std::find(first, last, 0) == last;
}

// Doubled coordinate q: odd = inside cell (q-1)/2, even = face between
// cells q/2 - 1 and q/2.
void cells_at(std::int64_t q, std::int64_t out[2], int& count) {
  count = 0;
  if (q % 2 != 0) {
    out[count++] = (q - 1) / 2;
  } else {
    out[count++] = q / 2 - 1;
    out[count++] = q / 2;
  }
}

// Any cell in the product of candidate sets occupied.
bool any_occupied(const Dense& d, const std::vector<std::array<std::int64_t, 2>>& cand, const std::vector<int>& cnt) {
  const std::size_t n = cand.size();
  IndexN local(n);
  std::vector<int> pick(n, 0);
  for (;;) {
    for (std::size_t k = 0; k < n; ++k) local[k] = cand[k][static_cast<std::size_t>(pick[k])];
    if (d.at(local)) return true;
    std::size_t k = 0;
    for (; k < n; ++k) {
      if (++pick[k] < cnt[k]) break;
      pick[k] = 0;
    }
    if (k == n) return false;
  }
}

}  // namespace

bool is_ortho_convex_n(const GridRegionN& r) {
  if (r.empty()) return true;
  Dense d(r);
  const std::size_t n = d.n;
  for (std::size_t axis = 0; axis < n; ++axis) {
    IndexN lim(n);
    for (std::size_t k = 0; k < n; ++k) lim[k] = 2 * d.ext[k] - 1;
    bool ok = true;
    for_each_position(lim, axis, [&](const IndexN& q) {
      if (!ok) return;
      std::vector<unsigned char> line(static_cast<std::size_t>(d.ext[axis]), 0);
      std::vector<std::array<std::int64_t, 2>> cand(n);
      std::vector<int> cnt(n);
      for (std::size_t k = 0; k < n; ++k)
        if (k != axis) cells_at(q[k] + 1, cand[k].data(), cnt[k]);
      for (std::int64_t t = 0; t < d.ext[axis]; ++t) {
        cand[axis] = {t, t};
        cnt[axis] = 1;
        line[static_cast<std::size_t>(t)] = any_occupied(d, cand, cnt) ? 1 : 0;
      }
      ok = contiguous(line);
    });
    if (!ok) return false;
  }
  return true;
}

GridRegionN slice(const GridRegionN& r, std::size_t axis, std::int64_t k) {
  if (r.dim() < 2 || axis >= r.dim())
    throw Error(ErrorCode::PreconditionViolated, "slice needs dim >= 2 and a valid axis");
  std::vector<IndexN> cells;
  for (const IndexN& c : r.cells())
    if (c[axis] == k) {
      IndexN v = c;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(axis));
      cells.push_back(std::move(v));
    }
  PtN origin = r.origin();
  origin.coords.erase(origin.coords.begin() + static_cast<std::ptrdiff_t>(axis));
  return GridRegionN(r.dim() - 1, std::move(origin), r.cell(), std::move(cells));
}

GridRegionN face_slice(const GridRegionN& r, std::size_t axis, std::int64_t k) {
  GridRegionN lower = slice(r, axis, k - 1);
  GridRegionN upper = slice(r, axis, k);
  std::vector<IndexN> cells(lower.cells().begin(), lower.cells().end());
  cells.insert(cells.end(), upper.cells().begin(), upper.cells().end());
  return lower.with_cells(std::move(cells));
}

EquivalenceReport check_equivalences(const GridRegionN& r) {
  if (r.dim() < 2) throw Error(ErrorCode::PreconditionViolated, "equivalences need dim >= 2");
  EquivalenceReport rep;
  rep.lines = is_ortho_convex_n(r);

  Dense d(r);
  const std::size_t n = d.n;
  rep.slices = true;
  for (std::size_t axis = 0; axis < n && rep.slices; ++axis)
    for (std::int64_t k = d.lo[axis]; k <= d.lo[axis] + d.ext[axis] && rep.slices; ++k)
      rep.slices = is_ortho_convex_n(slice(r, axis, k)) && is_ortho_convex_n(face_slice(r, axis, k));

  // Sample points in doubled local coordinates 1 .. 2*ext-1.
  rep.points = true;
  auto member = [&](const IndexN& q) {
    std::vector<std::array<std::int64_t, 2>> cand(n);
    std::vector<int> cnt(n);
    for (std::size_t k = 0; k < n; ++k) cells_at(q[k], cand[k].data(), cnt[k]);
    return any_occupied(d, cand, cnt);
  };
  IndexN lim(n);
  for (std::size_t k = 0; k < n; ++k) lim[k] = 2 * d.ext[k] - 1;
  for (std::size_t axis = 0; axis < n && rep.points; ++axis) {
    for_each_position(lim, axis, [&](const IndexN& base) {
      if (!rep.points) return;
      IndexN q = base;
      for (std::size_t k = 0; k < n; ++k) q[k] += 1;
      std::vector<std::int64_t> in;
      for (std::int64_t t = 1; t < 2 * d.ext[axis]; ++t) {
        q[axis] = t;
        if (member(q)) in.push_back(t);
      }
      // Any two members on the line have every sample between them inside.
      for (std::size_t k = 1; k < in.size(); ++k)
        if (in[k] != in[k - 1] + 1) rep.points = false;
    });
  }
  return rep;
}

GridRegionN ortho_hull_n(const GridRegionN& r) {
  if (r.empty()) return r;
  Dense d(r);
  const std::size_t n = d.n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t axis = 0; axis < n; ++axis) {
      std::vector<IndexN> starts;
      IndexN lim = d.ext;
      for_each_position(lim, axis, [&](const IndexN& v) { starts.push_back(v); });
      int any = 0;
#pragma omp parallel for reduction(| : any) schedule(static)
      for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(starts.size()); ++s) {
        const IndexN& v = starts[static_cast<std::size_t>(s)];
        std::int64_t base = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (k != axis) base += v[k] * d.stride[k];
        auto cell = [&](std::int64_t t) -> unsigned char& {
          return d.bits[static_cast<std::size_t>(base + t * d.stride[axis])];
        };
        std::int64_t lo = -1, hi = -1;
        for (std::int64_t t = 0; t < d.ext[axis]; ++t)
          if (cell(t)) {
            if (lo < 0) lo = t;
            hi = t;
          }
        for (std::int64_t t = lo + 1; lo >= 0 && t < hi; ++t)
          if (!cell(t)) {
            cell(t) = 1;
            any = 1;
          }
      }
      changed = changed || any != 0;
    }
  }
  std::vector<IndexN> cells;
  for_each_position(d.ext, n, [&](const IndexN& v) {
    if (d.at(v)) {
      IndexN c = v;
      for (std::size_t k = 0; k < n; ++k) c[k] += d.lo[k];
      cells.push_back(std::move(c));
    }
  });
  return r.with_cells(std::move(cells));
}

GridRegionN interior_region(const GridRegionN& r) {
  const std::size_t n = r.dim();
  std::vector<IndexN> cells;
  IndexN three(n, 3);
  for (const IndexN& c : r.cells()) {
    bool inner = true;
    for_each_position(three, n, [&](const IndexN& off) {
      if (!inner) return;
      IndexN nb = c;
      for (std::size_t k = 0; k < n; ++k) nb[k] += off[k] - 1;
      if (!r.has(nb)) inner = false;
    });
    if (inner) cells.push_back(c);
  }
  return r.with_cells(std::move(cells));
}

GridRegionN permute_axes(const GridRegionN& r, const std::vector<std::size_t>& perm) {
  const std::size_t n = r.dim();
  if (perm.size() != n) throw Error(ErrorCode::PreconditionViolated, "permutation arity differs from dim");
  std::vector<IndexN> cells;
  for (const IndexN& c : r.cells()) {
    IndexN v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = c[perm[k]];
    cells.push_back(std::move(v));
  }
  PtN origin{std::vector<Rat>(n)};
  for (std::size_t k = 0; k < n; ++k) origin.coords[k] = r.origin().coords[perm[k]];
  return GridRegionN(n, std::move(origin), r.cell(), std::move(cells));
}

bool FaceSetN::has(const IndexN& q) const { return std::binary_search(faces.begin(), faces.end(), q); }

FaceSetN open_interior(const GridRegionN& r) {
  const std::size_t n = r.dim();
  FaceSetN out{n, {}};
  if (r.empty()) return out;
  Dense d(r);
  IndexN three(n, 3);
  std::vector<std::array<std::int64_t, 2>> cand(n);
  std::vector<int> cnt(n);
  for (const IndexN& c : r.cells())
    for_each_position(three, n, [&](const IndexN& off) {
      IndexN q(n);
      for (std::size_t k = 0; k < n; ++k) {
        q[k] = 2 * c[k] + off[k];
        std::int64_t buf[2];
        cells_at(q[k], buf, cnt[k]);
        for (int t = 0; t < cnt[k]; ++t) cand[k][static_cast<std::size_t>(t)] = buf[t] - d.lo[k];
      }
      // every incident cell occupied
      std::vector<int> pick(n, 0);
      IndexN local(n);
      for (;;) {
        for (std::size_t k = 0; k < n; ++k) local[k] = cand[k][static_cast<std::size_t>(pick[k])];
        if (!d.at(local)) return;
        std::size_t k = 0;
        for (; k < n; ++k) {
          if (++pick[k] < cnt[k]) break;
          pick[k] = 0;
        }
        if (k == n) break;
      }
      out.faces.push_back(std::move(q));
    });
  std::sort(out.faces.begin(), out.faces.end());
  out.faces.erase(std::unique(out.faces.begin(), out.faces.end()), out.faces.end());
  return out;
}

bool is_ortho_convex_faces(const FaceSetN& s) {
  for (std::size_t axis = 0; axis < s.dim; ++axis) {
    std::map<IndexN, std::vector<std::int64_t>> lines;
    for (const IndexN& q : s.faces) {
      IndexN key = q;
      key[axis] = 0;
      lines[key].push_back(q[axis]);
    }
    for (auto& [key, pos] : lines) {
      auto [lo, hi] = std::minmax_element(pos.begin(), pos.end());
      if (*hi - *lo + 1 != static_cast<std::int64_t>(pos.size())) return false;
    }
  }
  return true;
}

}  // namespace oc
