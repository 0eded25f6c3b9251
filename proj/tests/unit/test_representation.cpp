#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orthoconvex/generators.hpp"
#include "orthoconvex/representation.hpp"

using namespace oc;

namespace {

StaircaseHalfplane containing(StaircaseLine l, const Pt2& inside) { return {l, l.side_of(inside)}; }

AxisRect window(const GridRegion& r) {
  AxisRect b = *r.bounds();
  Rat m = r.cell() * 2;
  return AxisRect({b.min().x - m, b.min().y - m}, {b.max().x + m, b.max().y + m});
}

}  // namespace

TEST_SUITE("representation") {
  TEST_CASE("unit square from four straight lines") {
    Pt2 c{Rat(1, 2), Rat(1, 2)};
    HalfplaneFamily f{{containing(StaircaseLine({{Rat(0), Rat(0)}}, AxisDir::NegY, AxisDir::PosY), c),
                       containing(StaircaseLine({{Rat(1), Rat(0)}}, AxisDir::NegY, AxisDir::PosY), c),
                       containing(StaircaseLine({{Rat(0), Rat(0)}}, AxisDir::NegX, AxisDir::PosX), c),
                       containing(StaircaseLine({{Rat(0), Rat(1)}}, AxisDir::NegX, AxisDir::PosX), c)}};
    AxisRect w({Rat(-1), Rat(-1)}, {Rat(2), Rat(2)});
    GridRegion r = intersect_family(f, w, Rat(1, 2));
    CHECK(r.size() == 4);
    CHECK(r == GridRegion(Pt2{Rat(0), Rat(0)}, Rat(1, 2), {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(f.contains({Rat(1), Rat(1)}));
    CHECK_FALSE(f.contains({Rat(1), Rat(11, 10)}));
  }

  TEST_CASE("empty intersection") {
    HalfplaneFamily f{{containing(StaircaseLine({{Rat(1), Rat(0)}}, AxisDir::NegY, AxisDir::PosY), {Rat(2), Rat(0)}),
                       containing(StaircaseLine({{Rat(0), Rat(0)}}, AxisDir::NegY, AxisDir::PosY), {Rat(-1), Rat(0)})}};
    CHECK(intersect_family(f, AxisRect({Rat(-3), Rat(-3)}, {Rat(3), Rat(3)}), Rat(1)).empty());
  }

  TEST_CASE("four chains reproduce the region") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 150; ++k) {
      GridRegion r = random_ortho_convex_region(rng, 16, 16);
      HalfplaneFamily f = four_chain_decomposition(r);
      CHECK(f.halfplanes.size() == 4);
      GridRegion back = intersect_family(f, window(r), r.cell());
      CHECK(back == r);
      CHECK(back == intersect_family_reference(f, window(r), r.cell()));
      for (const auto& c : r.cells()) CHECK(f.contains(r.cell_center(c)));
    }
  }

  TEST_CASE("arbitrary intersections are ortho-convex point sets, single halfplanes rasterise convexly") {
    std::mt19937_64 rng(52);
    AxisRect w({Rat(-2), Rat(-2)}, {Rat(18), Rat(18)});
    for (int k = 0; k < 60; ++k) {
      HalfplaneFamily mixed;
      for (int j = 0; j < 3; ++j) {
        HalfplaneFamily f = four_chain_decomposition(random_ortho_convex_region(rng, 16, 16));
        for (const auto& h : f.halfplanes)
          if (rng() % 2) mixed.halfplanes.push_back(h);
      }
      GridRegion r = intersect_family(mixed, w, Rat(1, 2));
      CHECK(r == intersect_family_reference(mixed, w, Rat(1, 2)));
      for (const auto& c : r.cells()) CHECK(mixed.contains(r.cell_center(c)));
      // The point set is ortho-convex; its pieces have integer coordinates,
      // so quarter-step sampling sees every gap.
      bool convex = true;
      for (int axis = 0; axis < 2 && convex; ++axis)
        for (std::int64_t c = -8; c <= 72 && convex; ++c) {
          int state = 0;
          for (std::int64_t t = -8; t <= 72; ++t) {
            Pt2 p = axis == 0 ? Pt2{Rat(c, 4), Rat(t, 4)} : Pt2{Rat(t, 4), Rat(c, 4)};
            bool in = mixed.contains(p);
            if (in && state == 2) convex = false;
            if (in) state = 1;
            else if (state == 1) state = 2;
          }
        }
      CHECK(convex);
      for (const auto& h : mixed.halfplanes)
        CHECK(is_ortho_convex_region(intersect_family(HalfplaneFamily{{h}}, w, Rat(1))));
    }
  }

  TEST_CASE("traces of halfplane intersections on segments are closed") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 100; ++k) {
      GridRegion r = random_ortho_convex_region(rng, 12, 12);
      HalfplaneFamily f = four_chain_decomposition(r);
      Pt2 u = r.cell_center(r.cells()[rng() % r.size()]);
      Pt2 dir = axis_dir_vector(static_cast<AxisDir>(rng() % 4));
      Pt2 w = u + Rat(20) * dir;
      REQUIRE_FALSE(f.contains(w));
      Rat t = Rat(1);
      for (const auto& h : f.halfplanes) t = min(t, oracle::exit_parameter(h, u, w));
      Pt2 sup = u + t * (w - u);
      CHECK(f.contains(sup));                              // supremum attained
      CHECK_FALSE(f.contains(sup + Rat(1, 1024) * dir));  // and it is the supremum
    }
  }
}
