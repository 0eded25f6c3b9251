#include "orthoconvex/hull.hpp"

#include <map>

#include "orthoconvex/error.hpp"
#include "parallel.hpp"

namespace oc {

namespace {

struct Bitmap {
  std::int64_t w = 0, h = 0;
  std::vector<unsigned char> bits;
  unsigned char& at(std::int64_t x, std::int64_t y) { return bits[static_cast<std::size_t>(y * w + x)]; }
};

// Fills between the extreme occupied entries of every line; true if any
// entry changed.
bool sweep(Bitmap& b, bool rows) {
  const std::int64_t lines = rows ? b.h : b.w;
  const std::int64_t len = rows ? b.w : b.h;
  int changed = 0;
#pragma omp parallel for reduction(| : changed) schedule(static)
  for (std::int64_t l = 0; l < lines; ++l) {
    auto cell = [&](std::int64_t k) -> unsigned char& { return rows ? b.at(k, l) : b.at(l, k); };
    std::int64_t lo = -1, hi = -1;
    for (std::int64_t k = 0; k < len; ++k)
      if (cell(k)) {
        if (lo < 0) lo = k;
        hi = k;
      }
    for (std::int64_t k = lo + 1; lo >= 0 && k < hi; ++k)
      if (!cell(k)) {
        cell(k) = 1;
        changed = 1;
      }
  }
  return changed != 0;
}

}  // namespace

HullResult ortho_hull(const GridRegion& r) {
  auto box = r.index_box();
  if (!box) return {r, 1};
  Bitmap b{box->width(), box->height(), {}};
  b.bits.assign(static_cast<std::size_t>(b.w * b.h), 0);
  for (const Cell& c : r.cells()) b.at(c.i - box->imin, c.j - box->jmin) = 1;
  std::size_t rounds = 0;
  bool changed = true;
  while (changed) {
    ++rounds;
    changed = sweep(b, true);
    changed = sweep(b, false) || changed;
  }
  std::vector<Cell> cells;
  for (std::int64_t x = 0; x < b.w; ++x)
    for (std::int64_t y = 0; y < b.h; ++y)
      if (b.at(x, y)) cells.push_back({x + box->imin, y + box->jmin});
  return {r.with_cells(std::move(cells)), rounds};
}

HullResult ortho_hull_reference(const GridRegion& r) {
  std::vector<Cell> cells(r.cells().begin(), r.cells().end());
  std::size_t rounds = 0;
  bool changed = true;
  while (changed) {
    ++rounds;
    changed = false;
    for (int pass = 0; pass < 2; ++pass) {
      std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> extent;
      for (const Cell& c : cells) {
        std::int64_t key = pass == 0 ? c.j : c.i;
        std::int64_t v = pass == 0 ? c.i : c.j;
        auto [it, fresh] = extent.try_emplace(key, v, v);
        if (!fresh) {
          it->second.first = std::min(it->second.first, v);
          it->second.second = std::max(it->second.second, v);
        }
      }
      std::vector<Cell> next;
      for (const auto& [key, span] : extent)
        for (std::int64_t v = span.first; v <= span.second; ++v)
          next.push_back(pass == 0 ? Cell{v, key} : Cell{key, v});
      std::sort(next.begin(), next.end());
      if (next.size() != cells.size()) changed = true;
      cells = std::move(next);
    }
  }
  return {r.with_cells(std::move(cells)), rounds};
}

HullResult ortho_hull_points(const PointSet2& points, const Rat& cell) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "hull of an empty point set");
  if (cell.sign() <= 0) throw Error(ErrorCode::NonAlignedCell, "cell size must be positive");
  Pt2 lo = points.points().front();
  for (const Pt2& p : points.points()) lo = {min(lo.x, p.x), min(lo.y, p.y)};
  std::vector<Cell> cells;
  for (const Pt2& p : points.points()) {
    Rat fi = (p.x - lo.x) / cell;
    Rat fj = (p.y - lo.y) / cell;
    if (!fi.is_integer() || !fj.is_integer())
      throw Error(ErrorCode::NonAlignedCell, "point " + p.str() + " is off the lattice of cell " + cell.str());
    cells.push_back({fi.to_int64(), fj.to_int64()});
  }
  return ortho_hull(GridRegion(lo, cell, std::move(cells)));
}

}  // namespace oc
