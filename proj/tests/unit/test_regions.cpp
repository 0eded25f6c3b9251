#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "orthoconvex/error.hpp"
#include "orthoconvex/generators.hpp"
#include "orthoconvex/regions.hpp"

using namespace oc;

namespace {

GridRegion unit(std::vector<Cell> cells) { return GridRegion(Pt2{Rat(0), Rat(0)}, Rat(1), std::move(cells)); }

// Components under "closed cells intersect", found by repeated relabelling.
std::size_t touching_components(const GridRegion& r) {
  std::vector<std::size_t> label(r.size());
  std::iota(label.begin(), label.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = 0; b < r.size(); ++b)
        if (label[b] < label[a] && rect_distance_sq(r.cell_rect(r.cells()[a]), r.cell_rect(r.cells()[b])).sign() == 0) {
          label[a] = label[b];
          changed = true;
        }
  }
  std::sort(label.begin(), label.end());
  return static_cast<std::size_t>(std::unique(label.begin(), label.end()) - label.begin());
}

}  // namespace

TEST_SUITE("regions") {
  TEST_CASE("lattice is canonicalised") {
    GridRegion a(Pt2{Rat(5, 2), Rat(1)}, Rat(1, 2), {{0, 0}});
    GridRegion b(Pt2{Rat(0), Rat(0)}, Rat(1, 2), {{5, 2}});
    CHECK(a == b);
    CHECK(a.origin() == Pt2{Rat(0), Rat(0)});
    CHECK(a.contains({Rat(3), Rat(3, 2)}));
    CHECK_FALSE(a.contains({Rat(3), Rat(8, 5)}));
    CHECK_THROWS_AS(GridRegion(Pt2{Rat(0), Rat(0)}, Rat(0), {}), Error);
  }

  TEST_CASE("ortho-convexity agrees with the sampling oracle on random 5x5 masks") {
    std::mt19937_64 rng(11);
    int agree = 0;
    for (int k = 0; k < 3000; ++k) {
      std::uint64_t m = rng() & ((std::uint64_t{1} << 25) - 1);
      if (k % 3 == 0) m &= rng();  // sparser masks
      if (k % 3 == 1) m |= rng() & ((std::uint64_t{1} << 25) - 1);
      agree += is_ortho_convex_region(oracle::mask_region(m, 5, 5)) == oracle::region_sweep(m, 5, 5);
    }
    CHECK(agree == 3000);
  }

  TEST_CASE("closed-set subtleties") {
    CHECK(is_ortho_convex_region(unit({{0, 0}, {2, 2}})));
    CHECK_FALSE(is_ortho_convex_region(unit({{0, 0}, {1, 2}})));  // line x=1 meets two pieces
    CHECK(is_ortho_convex_region(unit({{0, 0}, {1, 1}})));
    CHECK_FALSE(is_ortho_convex_region(unit({{0, 0}, {2, 0}})));
    CHECK(is_ortho_convex_region(GridRegion()));
  }

  TEST_CASE("path connectivity matches touching components") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 1500; ++k) {
      std::uint64_t m = rng() & rng() & ((std::uint64_t{1} << 25) - 1);
      GridRegion r = oracle::mask_region(m, 5, 5);
      std::size_t comps = r.empty() ? 0 : touching_components(r);
      CHECK(is_path_connected(r) == (comps <= 1));
      CHECK(connected_components(r).size() == comps);
    }
  }

  TEST_CASE("polygon rasterisation") {
    RectilinearPolygon l({{Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(3), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(2)},
                          {Rat(0), Rat(2)}});
    CHECK(l.area() == Rat(4));
    GridRegion r = polygon_to_region(l, Rat(1, 2));
    CHECK(Rat(static_cast<std::int64_t>(r.size())) * Rat(1, 4) == l.area());
    for (const auto& c : r.cells()) CHECK(l.contains(r.cell_center(c)));
    CHECK_THROWS_AS(polygon_to_region(l, Rat(2, 3)), Error);
    // clockwise input is reoriented
    RectilinearPolygon cw({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}});
    CHECK(cw.area() == Rat(1));
    CHECK_THROWS_AS(RectilinearPolygon({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}}), Error);
  }

  TEST_CASE("distances agree with the cell-pair reference") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 300; ++k) {
      GridRegion a = random_ortho_convex_region(rng, 10, 10);
      GridRegion b0 = random_ortho_convex_region(rng, 10, 10);
      std::vector<Cell> cells(b0.cells().begin(), b0.cells().end());
      // Second region on a shifted, finer lattice half the time.
      GridRegion b = k % 2 ? GridRegion(Pt2{Rat(1, 3), Rat(1, 5)}, Rat(1, 2), cells) : unit(cells);
      Rat d = region_distance_sq(a, b);
      CHECK(d == region_distance_sq_reference(a, b));
      CHECK(d == region_distance_sq(b, a));
      Pt2 p = random_exterior_point(rng, a, 10);
      Rat best = point_rect_distance_sq(p, a.cell_rect(a.cells()[0]));
      for (const auto& c : a.cells()) best = min(best, point_rect_distance_sq(p, a.cell_rect(c)));
      CHECK(point_region_distance_sq(p, a) == best);
      CHECK(region_distance_sq(PointSet2({p}), a) == best);
    }
    CHECK_THROWS_AS(region_distance_sq(GridRegion(), unit({{0, 0}})), Error);
  }

  TEST_CASE("boundary length equals exposed cell edges") {
    std::mt19937_64 rng(14);
    for (int k = 0; k < 200; ++k) {
      GridRegion r = oracle::mask_region(rng() & ((std::uint64_t{1} << 36) - 1), 6, 6);
      std::int64_t exposed = 0;
      for (const auto& c : r.cells())
        for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
          exposed += !r.has({c.i + di, c.j + dj});
      Rat total(0);
      for (const auto& s : boundary_segments(r)) total += norm1(s.p(), s.q());
      CHECK(total == Rat(exposed));
    }
  }
}
