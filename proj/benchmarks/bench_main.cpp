#include <random>

#include <benchmark/benchmark.h>

#include "ghgeo/correspondence.hpp"
#include "ghgeo/geodesy.hpp"
#include "ghgeo/gh_search.hpp"
#include "ghgeo/intervals.hpp"
#include "support/random_metric.hpp"

namespace {

using namespace ghgeo;

void BM_NearestPointDistortion(benchmark::State& state) {
  const int window = static_cast<int>(state.range(0));
  const auto z = sample(thick_lattice(Rational(3, 10), window), Rational(1, 10));
  const auto s = sample(matched_segment(Rational(3, 10), window), Rational(1, 10));
  const auto r = nearest_point_corr(z, s);
  for (auto _ : state) benchmark::DoNotOptimize(distortion(r, z, s));
  state.counters["pairs"] = static_cast<double>(r.pair_count());
}
BENCHMARK(BM_NearestPointDistortion)->Arg(1)->Arg(3)->Arg(6);

void BM_Hausdorff(benchmark::State& state) {
  const int window = static_cast<int>(state.range(0));
  const auto a = thick_lattice(Rational(3, 10), window);
  const auto b = matched_segment(Rational(3, 10), window);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(a, b));
}
BENCHMARK(BM_Hausdorff)->Arg(5)->Arg(50)->Arg(500);

void BM_SliceTable(benchmark::State& state) {
  const auto a = thick_lattice(Rational(3, 10), 5);
  const auto b = matched_segment(Rational(3, 10), 5);
  for (auto _ : state) benchmark::DoNotOptimize(slice_geodesic_table(a, b, Rational(1, 100)));
}
BENCHMARK(BM_SliceTable)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = testing::random_metric(rng, n);
  const auto y = testing::random_metric(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(gh_bruteforce(x, y));
}
BENCHMARK(BM_BruteForce)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_BranchAndBound(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = testing::random_metric(rng, n);
  const auto y = testing::random_metric(rng, n);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto r = gh_branch_and_bound(x, y);
    nodes = r.nodes_expanded;
    benchmark::DoNotOptimize(r.upper);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_BranchAndBound)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_EmpiricalRow(benchmark::State& state) {
  const Rational delta(1, 5);
  const auto p = GeodesicPoint::thick_lattice(Rational(2, 5), delta);
  const auto q = GeodesicPoint::real_product(Rational(1, 5), delta);
  const auto x = GeneratorSpace::two_point().space();
  for (auto _ : state) benchmark::DoNotOptimize(empirical_gh(p, q, x));
}
BENCHMARK(BM_EmpiricalRow)->Unit(benchmark::kMillisecond);

void BM_GeodesicTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_table(Rational(1, 5), Rational(1, 100)));
}
BENCHMARK(BM_GeodesicTable)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
