#include <doctest.h>

#include <random>

#include "orthoconvex/error.hpp"
#include "orthoconvex/generators.hpp"
#include "orthoconvex/limits.hpp"

using namespace oc;

namespace {

GridRegion unit(std::vector<Cell> cells) { return GridRegion(Pt2{Rat(0), Rat(0)}, Rat(1), std::move(cells)); }

Polyline path(std::initializer_list<std::pair<Rat, Rat>> pts) {
  std::vector<Pt2> v;
  for (auto [x, y] : pts) v.push_back({x, y});
  return Polyline(std::move(v));
}

}  // namespace

TEST_SUITE("limits") {
  TEST_CASE("Hausdorff brackets on known pairs") {
    GridRegion a = unit({{0, 0}});
    GridRegion b = unit({{3, 0}});
    HausdorffDist h = hausdorff(a, b, Rat(1, 4));
    CHECK(h.lo <= Rat(3));
    CHECK(Rat(3) <= h.hi);
    CHECK(h.hi - h.lo <= Rat(1));
    HausdorffDist same = hausdorff(a, a, Rat(1, 4));
    CHECK(same.lo == Rat(0));
    // nested squares: exact value 1 (corner of the big square to the small one is sqrt 2)
    GridRegion big = unit({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
    GridRegion mid = unit({{1, 1}});
    HausdorffDist n = hausdorff(big, mid, Rat(1, 8));
    CHECK(n.lo * n.lo <= Rat(2));
    CHECK(Rat(2) <= n.hi * n.hi);
  }

  TEST_CASE("Hausdorff symmetry, reference agreement, triangle inequality") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 40; ++k) {
      GridRegion a = random_ortho_convex_region(rng, 8, 8);
      GridRegion b = random_ortho_convex_region(rng, 8, 8);
      GridRegion c = random_ortho_convex_region(rng, 8, 8);
      Rat refine(1, 2);
      HausdorffDist ab = hausdorff(a, b, refine), ba = hausdorff(b, a, refine);
      CHECK(ab.lo == ba.lo);
      HausdorffDist ref = hausdorff_reference(a, b, refine);
      CHECK(ab.lo == ref.lo);
      CHECK(ab.hi == ref.hi);
      HausdorffDist bc = hausdorff(b, c, refine), ac = hausdorff(a, c, refine);
      CHECK(ac.lo <= ab.hi + bc.hi);
    }
  }

  TEST_CASE("polyline Hausdorff") {
    Polyline seg = path({{Rat(0), Rat(0)}, {Rat(4), Rat(0)}});
    Polyline bump = path({{Rat(0), Rat(0)}, {Rat(2), Rat(1)}, {Rat(4), Rat(0)}});
    HausdorffDist h = hausdorff(bump, seg, Rat(1, 16));
    CHECK(h.lo <= Rat(1));
    CHECK(Rat(1) <= h.hi);
  }

  TEST_CASE("shortest paths are monotone and stay inside") {
    GridRegion stairs = unit({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}});
    Pt2 a{Rat(1, 2), Rat(1, 2)}, b{Rat(7, 2), Rat(5, 2)};
    Polyline g = shortest_ortho_path(stairs, a, b);
    CHECK(g.front() == a);
    CHECK(g.back() == b);
    CHECK(is_ortho_convex_path(g));
    for (std::size_t k = 1; k < g.size(); ++k) CHECK(segment_in_region(stairs, g.points()[k - 1], g.points()[k]));
    CHECK(g.size() == 2);  // the straight segment fits
    CHECK_FALSE(segment_in_region(stairs, {Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(5, 2)}));
    // corner-touching cells: the path runs through the pinch point
    GridRegion pinch = unit({{1, 2}, {1, 3}, {2, 4}, {2, 5}, {2, 6}});
    Polyline through = shortest_ortho_path(pinch, {Rat(3, 2), Rat(7, 2)}, {Rat(5, 2), Rat(13, 2)});
    CHECK(through.size() == 3);
    CHECK(through.points()[1] == Pt2{Rat(2), Rat(4)});
    std::mt19937_64 rng(62);
    for (int k = 0; k < 60; ++k) {
      GridRegion r = random_ortho_convex_region(rng, 8, 8);
      Pt2 p = r.cell_center(r.cells()[rng() % r.size()]), q = r.cell_center(r.cells()[rng() % r.size()]);
      if (p == q) continue;
      Polyline s = shortest_ortho_path(r, p, q);
      CHECK(is_ortho_convex_path(s));
      CHECK(check_sandwich(s));
    }
  }

  TEST_CASE("convergence report follows the bounds") {
    auto rows = path_convergence_report({Rat(0), Rat(0)}, {Rat(4), Rat(0)}, 32, 7);
    REQUIRE(rows.size() == 32);
    for (const auto& r : rows) {
      CHECK(r.sandwich);
      Rat mid = (r.length.lo + r.length.hi) / Rat(2);
      CHECK(abs(mid - Rat(4)) <= r.length_bound);
      CHECK(r.hausdorff.hi <= r.hausdorff_bound);
    }
    auto again = path_convergence_report({Rat(0), Rat(0)}, {Rat(4), Rat(0)}, 32, 7);
    for (std::size_t k = 0; k < rows.size(); ++k) CHECK(rows[k].path.points().size() == again[k].path.points().size());
    CHECK_THROWS_AS(path_convergence_report({Rat(0), Rat(0)}, {Rat(1), Rat(1)}, 4, 7), Error);
  }

  TEST_CASE("Blaschke selection on the template sequence") {
    TemplateSequence ts = template_sequence(60, 5);
    BlaschkeResult r = blaschke_select(ts.sequence, {Rat(1), Rat(1, 2), Rat(1, 4)});
    REQUIRE(r.indices.size() >= 2);
    int label = ts.labels[r.indices[0]];
    for (auto i : r.indices) CHECK(ts.labels[i] == label);
    for (const auto& lv : r.levels) CHECK(lv.max_successive_hi <= Rat(2) * lv.tol);
    CHECK(r.limit_ortho_convex);
    CHECK_THROWS_AS(blaschke_select(ts.sequence, {Rat(1, 2), Rat(1)}), Error);
    SetSequence one{{ts.sequence.items[0]}, ts.sequence.bound};
    try {
      blaschke_select(one, {Rat(1)});
      FAIL("expected InsufficientItems");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InsufficientItems);
    }
  }

  TEST_CASE("open segment pair: closure breaks ortho-convexity at x = 0 only") {
    std::vector<EndpointSegment> s{{{Rat(-1), Rat(0)}, {Rat(0), Rat(0)}, false, false},
                                   {{Rat(0), Rat(1)}, {Rat(1), Rat(1)}, false, false}};
    CHECK(failing_lines(s).empty());
    auto bad = failing_lines(closure(s));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == AxisLine{true, Rat(0)});
    std::vector<EndpointSegment> corner{{{Rat(-1), Rat(0)}, {Rat(0), Rat(0)}, false, false},
                                        {{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, false, false}};
    CHECK(failing_lines(closure(corner)).empty());
    CHECK(closure_preserves(unit({{0, 0}, {1, 1}})));
  }
}
