#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orthoconvex/error.hpp"
#include "orthoconvex/generators.hpp"
#include "orthoconvex/separation.hpp"

using namespace oc;

namespace {

GridRegion unit(std::vector<Cell> cells) { return GridRegion(Pt2{Rat(0), Rat(0)}, Rat(1), std::move(cells)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("separation") {
  TEST_CASE("staircase lines") {
    StaircaseLine l({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}}, AxisDir::NegX, AxisDir::PosY);
    CHECK(l.side_of({Rat(0), Rat(1)}) == Side::Left);
    CHECK(l.side_of({Rat(2), Rat(0)}) == Side::Right);
    CHECK(l.side_of({Rat(1), Rat(1, 2)}) == Side::On);
    CHECK(l.side_of({Rat(-5), Rat(0)}) == Side::On);
    CHECK(l.meets({Rat(-3), Rat(-1)}, {Rat(-3), Rat(1)}));
    CHECK_FALSE(l.meets({Rat(2), Rat(-1)}, {Rat(2), Rat(-1, 2)}));
    // reflections flip the sides consistently
    StaircaseLine r = l.reflect_x();
    for (auto [x, y] : {std::pair{0, 1}, {2, 0}, {-3, 5}, {3, -2}}) {
      Pt2 p{Rat(x), Rat(y)}, q{Rat(-x), Rat(y)};
      Side a = l.side_of(p), b = r.side_of(q);
      CHECK((a == Side::On) == (b == Side::On));
    }
    CHECK(parse_axis_dir("+y") == AxisDir::PosY);
    CHECK_FALSE(parse_axis_dir("up").has_value());
    CHECK_THROWS_AS(StaircaseLine({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}, AxisDir::NegX, AxisDir::PosY), Error);
  }

  TEST_CASE("inflation strictly contains the set") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 100; ++k) {
      GridRegion a = random_ortho_convex_region(rng, 12, 12);
      Rat s(1, 1 + static_cast<std::int64_t>(rng() % 4));
      GridRegion g = grid_inflation(a, s);
      CHECK(g.cell() == s);
      CHECK(is_ortho_convex_region(g));
      // every point of a at distance >= s/2... sampled: corners of a's cells lie inside g
      for (const auto& c : a.cells()) {
        AxisRect q = a.cell_rect(c);
        for (const auto& p : {q.min(), q.max(), Pt2{q.min().x, q.max().y}, Pt2{q.max().x, q.min().y}}) {
          CHECK(g.contains(p));
          CHECK(g.contains(p + Pt2{s / Rat(2), s / Rat(2)}));
          CHECK(g.contains(p - Pt2{s / Rat(2), s / Rat(2)}));
        }
      }
    }
  }

  TEST_CASE("set separation verified independently") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 150; ++k) {
      auto [a, b] = random_disjoint_pair(rng, 14);
      SeparationCert c = separate_sets(a, b);
      CHECK(verify_certificate(c, a, b));
      CHECK(c.side_of_a != c.side_of_b);
      CHECK(oracle::strictly_on_side(c.line, c.side_of_a, a));
      CHECK(oracle::strictly_on_side(c.line, c.side_of_b, b));
      CHECK(Rat(8) * c.grid_size * c.grid_size <= region_distance_sq(a, b));
    }
  }

  TEST_CASE("degenerate inputs") {
    GridRegion cell = unit({{0, 0}});
    GridRegion row = unit({{0, 3}, {1, 3}, {2, 3}, {3, 3}});
    SeparationCert c = separate_sets(cell, row);
    CHECK(verify_certificate(c, cell, row));
    SeparationCert p = separate_point(row, {Rat(1, 2), Rat(5, 2)});
    CHECK(verify_certificate(p, row, Pt2{Rat(1, 2), Rat(5, 2)}));
    CHECK(oracle::strictly_on_side(p.line, p.side_of_b, Pt2{Rat(1, 2), Rat(5, 2)}));
  }

  TEST_CASE("point separation on random pairs") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 200; ++k) {
      GridRegion s = random_ortho_convex_region(rng, 12, 12);
      Pt2 p = random_exterior_point(rng, s, 12);
      SeparationCert c = separate_point(s, p);
      CHECK(verify_certificate(c, s, p));
      CHECK(oracle::strictly_on_side(c.line, c.side_of_a, s));
      CHECK(oracle::strictly_on_side(c.line, c.side_of_b, p));
    }
  }

  TEST_CASE("preconditions") {
    GridRegion split = unit({{0, 0}, {3, 3}});  // ortho-convex, not path-connected
    CHECK(is_ortho_convex_region(split));
    CHECK(code_of([&] { separate_point(split, {Rat(1), Rat(3)}); }) == ErrorCode::NotPathConnected);
    CHECK(code_of([&] { separate_sets(split, unit({{6, 0}})); }) == ErrorCode::NotPathConnected);
    GridRegion u = unit({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}});
    CHECK(code_of([&] { separate_point(u, {Rat(3, 2), Rat(3, 2)}); }) == ErrorCode::NotOrthoConvex);
    CHECK(code_of([&] { separate_point(unit({{0, 0}}), {Rat(1), Rat(1, 2)}); }) == ErrorCode::PointInside);
    CHECK(code_of([&] { separate_sets(unit({{0, 0}}), unit({{1, 1}})); }) == ErrorCode::NotDisjoint);
    CHECK(code_of([&] { separate_sets(GridRegion(), unit({{1, 1}})); }) == ErrorCode::EmptyInput);
  }

  TEST_CASE("tampered certificates are rejected") {
    GridRegion a = unit({{0, 0}, {1, 0}});
    GridRegion b = unit({{4, 4}});
    SeparationCert c = separate_sets(a, b);
    SeparationCert swapped = c;
    std::swap(swapped.side_of_a, swapped.side_of_b);
    CHECK_FALSE(verify_certificate(swapped, a, b));
    SeparationCert through{StaircaseLine({{Rat(1), Rat(0)}}, AxisDir::NegY, AxisDir::PosX), Side::Left, Side::Right,
                           Rat(1)};
    CHECK_FALSE(verify_certificate(through, a, b));
  }
}
