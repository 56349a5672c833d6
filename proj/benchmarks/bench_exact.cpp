#include <benchmark/benchmark.h>

#include "hexalab/constructions.hpp"
#include "hexalab/hex.hpp"
#include "hexalab/symbolic.hpp"
#include "hexalab/tiling.hpp"
#include "hexalab/zrelation.hpp"

using namespace hexalab;

static void BM_CvcNamedGraph(benchmark::State& state) {
  const auto s = named_graph("truncated_icosahedron");
  for (auto _ : state) benchmark::DoNotOptimize(check_cvc(s).holds);
}
BENCHMARK(BM_CvcNamedGraph);

static void BM_CvcHypercube(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto s = hamming_space(k, std::vector<Rational>(k, 1));
  for (auto _ : state) benchmark::DoNotOptimize(check_cvc(s).holds);
}
BENCHMARK(BM_CvcHypercube)->DenseRange(4, 8, 2);

static void BM_HexAllHexachords(benchmark::State& state) {
  const auto c = named_graph("cycle", 12);
  for (auto _ : state) {
    int ok = 0;
    for (std::uint32_t m = 0; m < (1u << 12); ++m) {
      if (__builtin_popcount(m) != 6) continue;
      std::vector<bool> a(12);
      for (int i = 0; i < 12; ++i) a[i] = m >> i & 1;
      ok += check_hex(c, SubsetMask(c, a)).holds;
    }
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_HexAllHexachords)->Unit(benchmark::kMillisecond);

static void BM_Transitivity(benchmark::State& state) {
  const auto s = named_graph("dodecahedron");
  for (auto _ : state) benchmark::DoNotOptimize(is_transitive(s));
}
BENCHMARK(BM_Transitivity);

static void BM_KernelCriteria(benchmark::State& state) {
  const auto t = group_interval_table(FiniteGroup::symmetric(4), GroupTableMode::left_quotient);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_hex_prime(t).holds);
    benchmark::DoNotOptimize(check_hex_doubleprime(t).holds);
  }
}
BENCHMARK(BM_KernelCriteria);

static void BM_DecompositionOracle(benchmark::State& state) {
  const auto t = group_interval_table(FiniteGroup::cyclic_product({3, 4}), GroupTableMode::left_quotient);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_decomposition_oracle(t, 100, 1, OracleMode::hex_doubleprime).consistent);
}
BENCHMARK(BM_DecompositionOracle);

static void BM_ZeroSet(benchmark::State& state) {
  const CyclicSubset a(72, {0, 8, 16, 18, 26, 34});
  for (auto _ : state) benchmark::DoNotOptimize(zero_set(a).zeros.size());
}
BENCHMARK(BM_ZeroSet);

static void BM_TilingSweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tiling_proposition_sweep(n, 1).disagreements);
}
BENCHMARK(BM_TilingSweep)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_VuzaComplements(benchmark::State& state) {
  const CyclicSubset a(72, {0, 8, 16, 18, 26, 34});
  for (auto _ : state) benchmark::DoNotOptimize(find_complements(a, true, 1).size());
}
BENCHMARK(BM_VuzaComplements)->Unit(benchmark::kMillisecond);

static void BM_HomometryClasses(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homometry_classes(n, n / 2, 1).ti_classes);
}
BENCHMARK(BM_HomometryClasses)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
