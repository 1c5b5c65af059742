#include <benchmark/benchmark.h>

#include "freeclt/partitions.hpp"

namespace {

void BM_CountPartitions(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const bool nc = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(freeclt::count_partitions(k, nc));
}
BENCHMARK(BM_CountPartitions)->ArgsProduct({{8, 10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CountProfile(benchmark::State& state) {
  const freeclt::BlockProfile profile{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  const auto flavor = state.range(2) ? freeclt::Flavor::free : freeclt::Flavor::classical;
  for (auto _ : state) benchmark::DoNotOptimize(freeclt::count_profile(profile, flavor));
}
BENCHMARK(BM_CountProfile)->Args({1, 6, 1})->Args({1, 6, 0})->Args({3, 5, 1})->Args({3, 5, 0});

void BM_TallyBlockSizes(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(freeclt::tally_block_sizes(k, false));
}
BENCHMARK(BM_TallyBlockSizes)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
