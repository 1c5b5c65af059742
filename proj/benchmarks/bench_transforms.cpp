#include <benchmark/benchmark.h>

#include <vector>

#include "freeclt/clt.hpp"
#include "freeclt/cumulants.hpp"
#include "freeclt/partition_sums.hpp"

namespace {

using freeclt::Flavor;
using freeclt::QSqrt2;
using freeclt::Rational;
using freeclt::Sequence;
using freeclt::SequenceKind;

Sequence sample(Flavor flavor, SequenceKind kind, std::size_t length) {
  std::vector<QSqrt2> e;
  for (std::size_t i = 1; i <= length; ++i) e.emplace_back(Rational(static_cast<long>(i % 7) - 3, static_cast<long>(i + 1)));
  return Sequence(flavor, kind, e);
}

Flavor flavor_arg(const benchmark::State& state) { return state.range(1) ? Flavor::free : Flavor::classical; }

void BM_MomentsToCumulants(benchmark::State& state) {
  const Sequence m = sample(flavor_arg(state), SequenceKind::moments, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(freeclt::moments_to_cumulants(m));
}
BENCHMARK(BM_MomentsToCumulants)->ArgsProduct({{8, 16, 32}, {0, 1}});

void BM_CumulantsToMomentsByPartitions(benchmark::State& state) {
  const Flavor f = flavor_arg(state);
  const Sequence c = sample(f, SequenceKind::cumulants, state.range(0));
  const auto tables = freeclt::PartitionSumTables::build(f, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(freeclt::cumulants_to_moments_by_partitions(c, tables));
}
BENCHMARK(BM_CumulantsToMomentsByPartitions)->ArgsProduct({{6, 10}, {0, 1}});

void BM_ApplyT(benchmark::State& state) {
  const Sequence m = sample(flavor_arg(state), SequenceKind::moments, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(freeclt::apply_T(m));
}
BENCHMARK(BM_ApplyT)->ArgsProduct({{10, 20}, {0, 1}});

void BM_Eigencheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(freeclt::eigencheck(flavor_arg(state), state.range(0)));
}
BENCHMARK(BM_Eigencheck)->ArgsProduct({{8, 16}, {0, 1}});

}  // namespace
