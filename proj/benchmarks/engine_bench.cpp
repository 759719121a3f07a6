#include <benchmark/benchmark.h>

#include <random>

#include "cy5/engine.hpp"
#include "cy5/genus1.hpp"
#include "cy5/localp2.hpp"
#include "cy5/series.hpp"

namespace {

// Full local P^2 table, cold memo each iteration.
void BM_LocalP2Table(benchmark::State& state) {
  const int max_degree = static_cast<int>(state.range(0));
  const cy5::Geometry geometry = cy5::localp2_geometry(max_degree);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cy5::compute_bps_table(geometry, max_degree));
  }
}
BENCHMARK(BM_LocalP2Table)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_LocalP2TableThreaded(benchmark::State& state) {
  const cy5::Geometry geometry = cy5::localp2_geometry(60);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cy5::compute_bps_table(geometry, 60, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_LocalP2TableThreaded)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

// Warm memo: the cost of a lookup path through the public API.
void BM_WarmChernLookup(benchmark::State& state) {
  const cy5::Geometry geometry = cy5::localp2_geometry(40);
  cy5::Engine engine(geometry);
  engine.chern_integral(cy5::CurveClass(40));
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.chern_integral(cy5::CurveClass(40)));
  }
}
BENCHMARK(BM_WarmChernLookup);

void BM_InvertMultiCover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::vector<cy5::Rational> values;
  for (int i = 0; i < n; ++i) values.emplace_back(num(rng), 1 + i);
  const cy5::DegreeSeries series(values);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cy5::invert_multi_cover(series, 2));
  }
}
BENCHMARK(BM_InvertMultiCover)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
