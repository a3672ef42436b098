#include <benchmark/benchmark.h>

#include <random>

#include "campana/cartan_local.hpp"
#include "campana/constant_engine.hpp"
#include "campana/padic_oracle.hpp"
#include "campana/pgl_count.hpp"
#include "campana/squareful_count.hpp"

using namespace campana;

static void BM_SquarefulTriples(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_campana_triples(state.range(0)));
}
BENCHMARK(BM_SquarefulTriples)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

static void BM_SquarefulTripleOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::triple_count_oracle(state.range(0)));
}
BENCHMARK(BM_SquarefulTripleOracle)->RangeMultiplier(10)->Range(1000, 10000)->Unit(benchmark::kMillisecond);

static std::vector<std::vector<i64>> random_matrices(int n, std::size_t count) {
  std::mt19937_64 rng(1);
  std::vector<std::vector<i64>> out;
  while (out.size() < count) {
    std::vector<i64> m(static_cast<std::size_t>(n * n));
    for (auto& x : m) x = static_cast<i64>(rng() % 101) - 50;
    try {
      (void)elementary_divisors(n, m);
      out.push_back(m);
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

static void BM_SmithRowReduction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ms = random_matrices(n, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(elementary_divisors(n, ms[i++ % ms.size()]));
}
BENCHMARK(BM_SmithRowReduction)->DenseRange(2, 4);

static void BM_SmithMinors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ms = random_matrices(n, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::invariant_factors_via_minors(n, ms[i++ % ms.size()]));
}
BENCHMARK(BM_SmithMinors)->DenseRange(2, 4);

static void BM_PglCount(benchmark::State& state) {
  const auto m = parse_multiplicities("2");
  for (auto _ : state) benchmark::DoNotOptimize(count_pgl_campana(2, state.range(0), m).count);
}
BENCHMARK(BM_PglCount)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_BrauerSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brauer_sum(state.range(0), 10000).sum);
}
BENCHMARK(BM_BrauerSum)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
