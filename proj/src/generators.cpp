#include "orthoconvex/generators.hpp"

#include <algorithm>

#include "orthoconvex/hull.hpp"

namespace oc {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

GridRegion random_ortho_convex_region(std::mt19937_64& rng, std::int64_t w, std::int64_t h) {
  for (;;) {
    std::int64_t width = uniform(rng, 1, std::min<std::int64_t>(w, 1 + uniform(rng, 0, w - 1)));
    std::int64_t x0 = uniform(rng, 0, w - width);
    std::int64_t span = uniform(rng, 1, h);
    std::int64_t y0 = uniform(rng, 0, h - span);
    std::vector<std::int64_t> top(static_cast<std::size_t>(width)), bot(top.size());
    for (std::size_t k = 0; k < top.size(); ++k) {
      top[k] = y0 + uniform(rng, 1, span);
      bot[k] = y0 + uniform(rng, 0, span - 1);
    }
    // min of prefix/suffix maxima is unimodal; max of prefix/suffix minima
    // is valley-shaped.
    std::vector<std::int64_t> t(top.size()), b(top.size());
    std::int64_t run = 0;
    std::vector<std::int64_t> pre(top.size()), suf(top.size());
    for (std::size_t k = 0; k < top.size(); ++k) pre[k] = run = std::max(k ? run : top[0], top[k]);
    for (std::size_t k = top.size(); k-- > 0;) suf[k] = run = std::max(k + 1 < top.size() ? run : top[k], top[k]);
    for (std::size_t k = 0; k < top.size(); ++k) t[k] = std::min(pre[k], suf[k]);
    for (std::size_t k = 0; k < bot.size(); ++k) pre[k] = run = std::min(k ? run : bot[0], bot[k]);
    for (std::size_t k = bot.size(); k-- > 0;) suf[k] = run = std::min(k + 1 < bot.size() ? run : bot[k], bot[k]);
    for (std::size_t k = 0; k < bot.size(); ++k) b[k] = std::max(pre[k], suf[k]);
    std::vector<Cell> cells;
    for (std::size_t k = 0; k < t.size(); ++k)
      for (std::int64_t j = b[k]; j < t[k]; ++j) cells.push_back({x0 + static_cast<std::int64_t>(k), j});
    GridRegion r(Pt2{Rat(0), Rat(0)}, Rat(1), std::move(cells));
    if (!r.empty() && is_path_connected(r) && is_ortho_convex_region(r)) return r;
  }
}

std::pair<GridRegion, GridRegion> random_disjoint_pair(std::mt19937_64& rng, std::int64_t w) {
  for (;;) {
    GridRegion a = random_ortho_convex_region(rng, w, w);
    if (rng() % 2 == 0) {
      // A small region in a pocket of a's bounding box, clear of a.
      CellBox box = *a.index_box();
      std::vector<Cell> free;
      for (std::int64_t i = box.imin; i <= box.imax; ++i)
        for (std::int64_t j = box.jmin; j <= box.jmax; ++j) {
          GridRegion c(Pt2{Rat(0), Rat(0)}, Rat(1), {{i, j}});
          if (region_distance_sq(a, c).sign() > 0) free.push_back({i, j});
        }
      if (!free.empty()) {
        Cell seed = free[static_cast<std::size_t>(rng() % free.size())];
        std::vector<Cell> cells{seed};
        for (std::int64_t di = 0; di <= 1; ++di)
          for (std::int64_t dj = 0; dj <= 1; ++dj) {
            Cell c{seed.i + di, seed.j + dj};
            if (rng() % 2 == 0 && std::find(free.begin(), free.end(), c) != free.end()) cells.push_back(c);
          }
        GridRegion b = ortho_hull(GridRegion(Pt2{Rat(0), Rat(0)}, Rat(1), cells)).region;
        if (is_path_connected(b) && is_ortho_convex_region(b) && region_distance_sq(a, b).sign() > 0) return {a, b};
      }
      continue;
    }
    GridRegion b = random_ortho_convex_region(rng, w, w);
    if (region_distance_sq(a, b).sign() > 0) return {a, b};
  }
}

Pt2 random_exterior_point(std::mt19937_64& rng, const GridRegion& r, std::int64_t w) {
  for (;;) {
    Pt2 p{Rat(uniform(rng, -4, 4 * w + 4), 4), Rat(uniform(rng, -4, 4 * w + 4), 4)};
    if (!r.contains(p)) return p;
  }
}

Polyline random_monotone_polyline(std::mt19937_64& rng, std::int64_t extent, std::int64_t denominator,
                                  std::size_t max_vertices) {
  for (;;) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, static_cast<std::int64_t>(max_vertices)));
    std::vector<std::int64_t> xs(n), ys(n);
    for (std::size_t k = 0; k < n; ++k) {
      xs[k] = uniform(rng, 0, extent * denominator);
      ys[k] = uniform(rng, 0, extent * denominator);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    if (rng() % 2 == 0) std::reverse(ys.begin(), ys.end());
    std::vector<Pt2> pts;
    for (std::size_t k = 0; k < n; ++k) pts.push_back({Rat(xs[k], denominator), Rat(ys[k], denominator)});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() >= 2) return Polyline(std::move(pts));
  }
}

TemplateSequence template_sequence(std::size_t items, std::uint64_t seed) {
  static const std::vector<std::vector<Cell>> templates = {
      {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {2, 4}, {2, 5}},
      {{9, 3}, {10, 3}, {10, 4}, {11, 4}, {11, 5}, {12, 5}, {12, 6}},
      {{4, 9}, {5, 9}, {6, 9}, {4, 10}, {5, 10}, {6, 10}, {5, 11}},
  };
  std::mt19937_64 rng(seed);
  TemplateSequence out{{{}, AxisRect({Rat(0), Rat(0)}, {Rat(16), Rat(16)})}, {}};
  for (std::size_t k = 0; k < items; ++k) {
    int t = static_cast<int>(rng() % templates.size());
    Rat dx(static_cast<std::int64_t>(rng() % 8), 64), dy(static_cast<std::int64_t>(rng() % 8), 64);
    out.sequence.items.emplace_back(Pt2{dx, dy}, Rat(1), templates[static_cast<std::size_t>(t)]);
    out.labels.push_back(t);
  }
  return out;
}

GridRegionN random_ortho_convex_n(std::mt19937_64& rng, std::size_t dim, std::int64_t side) {
  for (;;) {
    std::vector<IndexN> cells;
    std::size_t boxes = static_cast<std::size_t>(uniform(rng, 1, 3));
    IndexN anchor(dim);
    for (auto& v : anchor) v = uniform(rng, 0, side - 1);
    for (std::size_t b = 0; b < boxes; ++b) {
      IndexN lo(dim), hi(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        // Boxes share the anchor so their union stays connected.
        lo[k] = uniform(rng, 0, anchor[k]);
        hi[k] = uniform(rng, anchor[k], side - 1);
      }
      IndexN v = lo;
      for (;;) {
        cells.push_back(v);
        std::size_t k = 0;
        for (; k < dim; ++k) {
          if (++v[k] <= hi[k]) break;
          v[k] = lo[k];
        }
        if (k == dim) break;
      }
    }
    GridRegionN r = ortho_hull_n(GridRegionN(dim, std::move(cells)));
    if (is_ortho_convex_n(r)) return r;
  }
}

}  // namespace oc
