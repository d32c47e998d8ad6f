// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "dioph/geography.hpp"
#include "dioph/parse.hpp"
#include "dioph/solver.hpp"

namespace {

void BM_MismatchScanSerial(benchmark::State& state) {
  const long r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dioph::cubesum_mismatches_serial(-r, r));
}

void BM_MismatchScanParallel(benchmark::State& state) {
  const long r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dioph::cubesum_mismatches(-r, r));
}

void BM_CubePairsSerial(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::cube_pair_counts_serial(limit));
}

void BM_CubePairsParallel(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::cube_pair_counts(limit));
}

void BM_RegionSerial(benchmark::State& state) {
  const std::int64_t r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dioph::geography_region_serial({-r, r}, {-r, 3 * r}));
}

void BM_RegionParallel(benchmark::State& state) {
  const std::int64_t r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dioph::geography_region({-r, r}, {-r, 3 * r}));
}

const char* kFamily = "y^3 - x^4 + 6*t*x^3 - 11*t^2*x^2 + 6*t^3*x";

void BM_RationalSearchSerial(benchmark::State& state) {
  const auto f = dioph::parse_qpoly(kFamily);
  for (auto _ : state)
    benchmark::DoNotOptimize(dioph::search_ff_solutions_serial(f, 1, dioph::SearchMode::rational));
}

void BM_RationalSearchParallel(benchmark::State& state) {
  const auto f = dioph::parse_qpoly(kFamily);
  for (auto _ : state)
    benchmark::DoNotOptimize(dioph::search_ff_solutions(f, 1, dioph::SearchMode::rational));
}

}  // namespace

BENCHMARK(BM_MismatchScanSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MismatchScanParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubePairsSerial)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubePairsParallel)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RationalSearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RationalSearchParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
