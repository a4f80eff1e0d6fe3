#include <benchmark/benchmark.h>

#include "dtn/rwp_gen.hpp"
#include "dtn/static_metrics.hpp"
#include "dtn/temporal_metrics.hpp"
#include "dtn/windowing.hpp"

namespace {

dtn::ContactTrace rwp_trace(std::size_t nodes, double duration) {
  dtn::RwpParams p;
  p.node_count = nodes;
  p.duration = duration;
  p.area_width = 500;
  p.area_height = 500;
  p.seed = 42;
  return dtn::generate(p);
}

dtn::SnapshotSequence rwp_snapshots(std::size_t nodes, double duration) {
  const auto trace = rwp_trace(nodes, duration);
  return dtn::build_snapshots(trace, dtn::AnalysisPeriod(trace.span_min(), trace.span_max()),
                              dtn::WindowConfig::make(300));
}

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rwp_trace(static_cast<std::size_t>(state.range(0)), 1800));
  }
}
BENCHMARK(BM_Generate)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_DistanceMatrix(benchmark::State& state) {
  const auto s = rwp_snapshots(static_cast<std::size_t>(state.range(0)), 7200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtn::temporal_distance_matrix(s));
  }
}
BENCHMARK(BM_DistanceMatrix)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ExactDistanceMatrix(benchmark::State& state) {
  const auto s = rwp_snapshots(static_cast<std::size_t>(state.range(0)), 7200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtn::exact_distance_matrix(s, dtn::Horizon::unlimited()));
  }
}
BENCHMARK(BM_ExactDistanceMatrix)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_TemporalBetweenness(benchmark::State& state) {
  const auto s = rwp_snapshots(static_cast<std::size_t>(state.range(0)), 7200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtn::temporal_betweenness_all(s));
  }
}
BENCHMARK(BM_TemporalBetweenness)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_StaticBetweenness(benchmark::State& state) {
  const auto trace = rwp_trace(static_cast<std::size_t>(state.range(0)), 7200);
  const auto graph = dtn::aggregate(trace, dtn::AnalysisPeriod(trace.span_min(), trace.span_max()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtn::betweenness_centrality_all(graph));
  }
}
BENCHMARK(BM_StaticBetweenness)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
