#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "freeclt/analytic.hpp"

namespace {

using namespace freeclt::analytic;

void BM_InvertK(benchmark::State& state) {
  const auto chi = AnalyticMeasure::semicircle();
  for (auto _ : state) benchmark::DoNotOptimize(invert_K(chi, Complex(0.1, -0.3)));
}
BENCHMARK(BM_InvertK);

void BM_FreeConvolutionPoint(benchmark::State& state) {
  const auto mu = AnalyticMeasure::semicircle();
  const auto nu = AnalyticMeasure::atoms({-1.0, 1.0}, {0.5, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(free_convolution_cauchy(mu, nu, Complex(0.7, 1e-4)));
}
BENCHMARK(BM_FreeConvolutionPoint);

void BM_FreeConvolveGrid(benchmark::State& state) {
  const auto chi = AnalyticMeasure::semicircle();
  const Grid grid{-3.0, 3.0, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(free_convolve(chi, chi, grid));
}
BENCHMARK(BM_FreeConvolveGrid)->Arg(101)->Arg(601)->Unit(benchmark::kMillisecond);

void BM_TableCauchy(benchmark::State& state) {
  std::vector<double> grid;
  std::vector<double> values;
  for (int i = 0; i <= 400; ++i) {
    const double x = -2.0 + 0.01 * i;
    grid.push_back(x);
    values.push_back(std::max(0.0, 4.0 - x * x));
  }
  const auto table = AnalyticMeasure::table(grid, values);
  for (auto _ : state) benchmark::DoNotOptimize(table.cauchy(Complex(0.3, 0.2)));
}
BENCHMARK(BM_TableCauchy);

}  // namespace
