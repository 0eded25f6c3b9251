// Parallel kernels against their serial references.
#include <random>

#include <benchmark/benchmark.h>

#include "orthoconvex/generators.hpp"
#include "orthoconvex/hull.hpp"
#include "orthoconvex/limits.hpp"
#include "orthoconvex/representation.hpp"

using namespace oc;

namespace {

GridRegion sparse_region(int side) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(side));
  std::vector<Cell> cells;
  for (int j = 0; j < side; ++j)
    for (int i = 0; i < side; ++i)
      if (rng() % 5 == 0) cells.push_back({i, j});
  return GridRegion(Pt2{Rat(0), Rat(0)}, Rat(1), std::move(cells));
}

std::pair<GridRegion, GridRegion> pair_of(int side) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(side) * 7);
  return random_disjoint_pair(rng, side);
}

AxisRect window_of(const GridRegion& r) {
  AxisRect b = *r.bounds();
  return AxisRect({b.min().x - 1, b.min().y - 1}, {b.max().x + 1, b.max().y + 1});
}

template <auto Hull>
void BM_hull(benchmark::State& s) {
  GridRegion r = sparse_region(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(Hull(r));
}

template <auto Dist>
void BM_distance(benchmark::State& s) {
  auto [a, b] = pair_of(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(Dist(a, b));
}

template <auto Intersect>
void BM_intersect(benchmark::State& s) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(s.range(0)));
  GridRegion r = random_ortho_convex_region(rng, static_cast<int>(s.range(0)), static_cast<int>(s.range(0)));
  HalfplaneFamily f = four_chain_decomposition(r);
  AxisRect w = window_of(r);
  for (auto _ : s) benchmark::DoNotOptimize(Intersect(f, w, r.cell()));
}

template <auto Haus>
void BM_hausdorff(benchmark::State& s) {
  auto [a, b] = pair_of(static_cast<int>(s.range(0)));
  Rat refine(1, 4);
  for (auto _ : s) benchmark::DoNotOptimize(Haus(a, b, refine));
}

void BM_blaschke(benchmark::State& s) {
  TemplateSequence ts = template_sequence(static_cast<std::size_t>(s.range(0)), 1);
  std::vector<Rat> schedule{Rat(1), Rat(1, 2), Rat(1, 4), Rat(1, 8)};
  for (auto _ : s) benchmark::DoNotOptimize(blaschke_select(ts.sequence, schedule));
}

}  // namespace

BENCHMARK(BM_hull<ortho_hull>)->Name("ortho_hull/parallel")->Arg(32)->Arg(128);
BENCHMARK(BM_hull<ortho_hull_reference>)->Name("ortho_hull/serial")->Arg(32)->Arg(128);
BENCHMARK(BM_distance<static_cast<Rat (*)(const GridRegion&, const GridRegion&)>(region_distance_sq)>)
    ->Name("region_distance_sq/parallel")->Arg(20)->Arg(60);
BENCHMARK(BM_distance<region_distance_sq_reference>)->Name("region_distance_sq/serial")->Arg(20)->Arg(60);
BENCHMARK(BM_intersect<intersect_family>)->Name("intersect_family/parallel")->Arg(16)->Arg(48);
BENCHMARK(BM_intersect<intersect_family_reference>)->Name("intersect_family/serial")->Arg(16)->Arg(48);
BENCHMARK(BM_hausdorff<static_cast<HausdorffDist (*)(const GridRegion&, const GridRegion&, const Rat&)>(hausdorff)>)
    ->Name("hausdorff/parallel")->Arg(12)->Arg(24);
BENCHMARK(BM_hausdorff<hausdorff_reference>)->Name("hausdorff/serial")->Arg(12)->Arg(24);
BENCHMARK(BM_blaschke)->Name("blaschke_select/parallel")->Arg(100)->Arg(400);

BENCHMARK_MAIN();
