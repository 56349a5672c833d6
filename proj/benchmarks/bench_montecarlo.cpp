#include <benchmark/benchmark.h>

#include "hexalab/montecarlo.hpp"

using namespace hexalab;

static void BM_SamplePairs(benchmark::State& state) {
  const auto spec = ContinuousSpaceSpec::parse(state.range(0) == 0 ? "sphere:2" : "klein:1,1");
  const auto pred = Predicate::parse(state.range(0) == 0 ? "band" : "strip");
  for (auto _ : state) benchmark::DoNotOptimize(sample_pairs(spec, pred, 100000, 1, 1).size());
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SamplePairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_KsTwoSample(benchmark::State& state) {
  const auto s = sample_pairs(ContinuousSpaceSpec::sphere(2), Predicate::parse("band"), 200000, 3, 1);
  const auto a = stratum_distances(s, Stratum::AA), b = stratum_distances(s, Stratum::AcAc);
  for (auto _ : state) benchmark::DoNotOptimize(ks_two_sample(a, b).statistic);
}
BENCHMARK(BM_KsTwoSample)->Unit(benchmark::kMillisecond);
