#include "chains.hpp"

#include "orthoconvex/error.hpp"

namespace oc::detail {

GridRegion reflect_x(const GridRegion& r) {
  std::vector<Cell> cells;
  for (const Cell& c : r.cells()) cells.push_back({-c.i - 1, c.j});
  return GridRegion({-r.origin().x, r.origin().y}, r.cell(), std::move(cells));
}

GridRegion reflect_y(const GridRegion& r) {
  std::vector<Cell> cells;
  for (const Cell& c : r.cells()) cells.push_back({c.i, -c.j - 1});
  return GridRegion({r.origin().x, -r.origin().y}, r.cell(), std::move(cells));
}

GridRegion to_ne_space(const GridRegion& r, Quadrant q) {
  switch (q) {
    case Quadrant::NE: return r;
    case Quadrant::SE: return reflect_y(r);
    case Quadrant::SW: return reflect_x(reflect_y(r));
    case Quadrant::NW: return reflect_x(r);
  }
  return r;
}

StaircaseLine reflect_line(const StaircaseLine& l, Quadrant q) {
  switch (q) {
    case Quadrant::NE: return l;
    case Quadrant::SE: return l.reflect_y();
    case Quadrant::SW: return l.reflect_x().reflect_y();
    case Quadrant::NW: return l.reflect_x();
  }
  return l;
}

std::optional<std::vector<Pt2>> ne_chain(const GridRegion& r) {
  auto prof = column_profile(r);
  if (!prof) return std::nullopt;
  const auto& top = prof->top;
  const std::size_t n = top.size();
  std::int64_t tmax = *std::max_element(top.begin(), top.end());
  std::size_t km = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (top[k] == tmax) km = k;
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  std::int64_t y = tmax;
  pts.push_back({prof->imin + static_cast<std::int64_t>(km) + 1, y});
  for (std::size_t k = km + 1; k < n; ++k) {
    if (top[k] > y) return std::nullopt;
    if (top[k] < y) {
      std::int64_t x = prof->imin + static_cast<std::int64_t>(k);
      if (pts.back() != std::make_pair(x, y)) pts.push_back({x, y});
      y = top[k];
      pts.push_back({x, y});
    }
  }
  std::pair<std::int64_t, std::int64_t> end{prof->imax() + 1, y};
  if (pts.back() != end) pts.push_back(end);
  std::vector<Pt2> out;
  for (const auto& [i, j] : pts) out.push_back(r.lattice_point(i, j));
  return out;
}

std::optional<StaircaseLine> chain_line(const GridRegion& r, Quadrant q, AxisDir head, AxisDir tail) {
  auto chain = ne_chain(to_ne_space(r, q));
  if (!chain) return std::nullopt;
  try {
    return reflect_line(StaircaseLine(std::move(*chain), head, tail), q);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace oc::detail
