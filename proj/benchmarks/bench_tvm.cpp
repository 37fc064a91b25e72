#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hrvtvm/hrvtvm.hpp"

namespace {

std::vector<double> walk(std::size_t n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> step(0.0, 15.0);
  std::vector<double> out(n);
  double v = 800.0;
  for (auto& x : out) {
    v += step(rng);
    if (v < 300.0) v = 300.0;
    x = v;
  }
  return out;
}

void BM_SecondOrderDiff(benchmark::State& state) {
  auto data = walk(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hrvtvm::second_order_diff(data));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SecondOrderDiff)->RangeMultiplier(10)->Range(100, 100'000);

void BM_BuildGrid(benchmark::State& state) {
  auto points = hrvtvm::build_tvm_points(
      hrvtvm::second_order_diff(walk(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(hrvtvm::build_grid(points, {10, 10, 10}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildGrid)->RangeMultiplier(10)->Range(100, 100'000);

void BM_Pipeline(benchmark::State& state) {
  hrvtvm::RRSeries series(walk(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hrvtvm::tvm_pipeline(series, {10, 10, 10}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Pipeline)->RangeMultiplier(10)->Range(100, 100'000);

void BM_Report(benchmark::State& state) {
  hrvtvm::RRSeries series(walk(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hrvtvm::report(series));
}
BENCHMARK(BM_Report)->Arg(1'000)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();
