#include <benchmark/benchmark.h>

#include "quasipolar/affine_group.hpp"
#include "quasipolar/antichain.hpp"

using namespace quasipolar;

static void BM_CharacterizedScan(benchmark::State& state) {
  const Modulus m(state.range(0));
  const auto group = enumerate_group(m);
  for (auto _ : state) {
    std::size_t hits = 0;
    for (const auto& g : group) hits += is_quasipolarity_characterized(g);
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(group.size()));
}
BENCHMARK(BM_CharacterizedScan)->DenseRange(12, 30, 6);

static void BM_BruteForceScan(benchmark::State& state) {
  const Modulus m(state.range(0));
  const auto group = enumerate_group(m);
  for (auto _ : state) {
    std::size_t hits = 0;
    for (const auto& g : group) hits += is_quasipolarity_bruteforce(g);
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(group.size()));
}
BENCHMARK(BM_BruteForceScan)->DenseRange(12, 30, 6);

static void BM_QuasipolarityConjugacy(benchmark::State& state) {
  const Modulus m(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quasipolarity_conjugacy(m));
}
BENCHMARK(BM_QuasipolarityConjugacy)->DenseRange(12, 24, 4);

static void BM_StrongClasses(benchmark::State& state) {
  const Modulus m(state.range(0));
  const auto strategy = static_cast<Strategy>(state.range(1));
  const PermGroup group = builtin_group(GroupKind::affine, m);
  for (auto _ : state) benchmark::DoNotOptimize(strong_classes(group, m, strategy));
}
BENCHMARK(BM_StrongClasses)
    ->ArgsProduct({{10, 12, 14, 16}, {static_cast<long>(Strategy::bruteforce), static_cast<long>(Strategy::via_mq)}})
    ->Unit(benchmark::kMillisecond);

static void BM_StrongClassesWorkers(benchmark::State& state) {
  const Modulus m(16);
  const PermGroup group = builtin_group(GroupKind::affine, m);
  const ScanOptions options{Budget{}, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(strong_classes(group, m, Strategy::bruteforce, options));
}
BENCHMARK(BM_StrongClassesWorkers)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
