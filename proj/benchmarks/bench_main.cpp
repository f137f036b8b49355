#include <benchmark/benchmark.h>

#include "modspace/experiments.hpp"
#include "modspace/families.hpp"
#include "modspace/norms.hpp"
#include "modspace/oracle.hpp"

namespace {

using namespace modspace;

void BM_ToFrequency(benchmark::State& state) {
  const auto g = GridSpec::make(1, static_cast<std::size_t>(state.range(0)), 8);
  const auto f = random_band_limited(g, 20.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(to_frequency(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ToFrequency)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_ModulationNorm(benchmark::State& state) {
  const auto g = GridSpec::make(1, static_cast<std::size_t>(state.range(0)), 8);
  const auto f = random_band_limited(g, 20.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(modulation_norm(f, Exponent(2), Exponent(1), 0.5));
}
BENCHMARK(BM_ModulationNorm)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

void BM_BesovNorm(benchmark::State& state) {
  const auto g = GridSpec::make(1, static_cast<std::size_t>(state.range(0)), 8);
  const auto f = random_band_limited(g, 20.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(besov_norm(f, Exponent(1), Exponent(2), 0.0));
}
BENCHMARK(BM_BesovNorm)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_Decide(benchmark::State& state) {
  const auto from = parse_space_spec("B[p=4/3,q=1,s=1/2]");
  const auto to = parse_space_spec("M[p=4,q=1]");
  for (auto _ : state) benchmark::DoNotOptimize(decide(from, to));
}
BENCHMARK(BM_Decide);

void BM_AnnulusSharpness(benchmark::State& state) {
  const auto from = parse_space_spec("B[p=1,q=1,s=3/4]");
  const auto to = parse_space_spec("M[p=1,q=1]");
  for (auto _ : state) benchmark::DoNotOptimize(run_sharpness(from, to, FamilyKind::Annulus));
}
BENCHMARK(BM_AnnulusSharpness)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
