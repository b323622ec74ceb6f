#include <benchmark/benchmark.h>

#include "slicedeg/bounds_engine.hpp"
#include "slicedeg/staircase.hpp"

namespace slicedeg {
namespace {

void BM_EnumerateClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(state.range(0)));
}
BENCHMARK(BM_EnumerateClasses)->Arg(16)->Arg(32)->Arg(64);

void BM_VsObstruction(benchmark::State& state) {
  const auto classes = enumerate_classes(state.range(0));
  const auto v = vs_thin(4);
  for (auto _ : state) {
    for (const auto& c : classes) benchmark::DoNotOptimize(vs_obstruction(c, v));
  }
}
BENCHMARK(BM_VsObstruction)->Arg(12)->Arg(16);

void BM_StaircaseOracle(benchmark::State& state) {
  Staircase st;
  for (std::int64_t i = 1; i <= state.range(0); ++i) st.n.push_back(2 * i);
  for (auto _ : state) benchmark::DoNotOptimize(vs_staircase_oracle(st));
}
BENCHMARK(BM_StaircaseOracle)->Arg(2)->Arg(4)->Arg(8);

void BM_LowerBound(benchmark::State& state, const char* name) {
  const auto db = load_knot_db(SLICEDEG_BUNDLED_DB).db;
  const auto& r = db.at(name);
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound(r, EngineConfig{}));
}
BENCHMARK_CAPTURE(BM_LowerBound, trefoil, "3_1");
BENCHMARK_CAPTURE(BM_LowerBound, knot_9_10, "9_10");
BENCHMARK_CAPTURE(BM_LowerBound, torus_4_5, "T(4,5)");

void BM_Table(benchmark::State& state) {
  const auto db = load_knot_db(SLICEDEG_BUNDLED_DB).db;
  for (auto _ : state) benchmark::DoNotOptimize(report_table(db, EngineConfig{}));
}
BENCHMARK(BM_Table)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace slicedeg

BENCHMARK_MAIN();
