#include <benchmark/benchmark.h>

#include <vector>

#include "paramsort/algorithms.hpp"
#include "paramsort/distributions.hpp"

namespace {

std::vector<std::uint64_t> geometric_input(std::size_t n, double p) {
  paramsort::RandomSource src(1);
  return paramsort::sample_geometric_array(src, paramsort::GeometricParam(p), n);
}

void BM_ExchangeSelectionSort(benchmark::State& state) {
  const auto input = geometric_input(static_cast<std::size_t>(state.range(0)), 0.5);
  std::vector<std::uint64_t> work;
  for (auto _ : state) {
    work = input;
    benchmark::DoNotOptimize(paramsort::exchange_selection_sort_in_place(std::span(work)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExchangeSelectionSort)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_TextbookSelectionSort(benchmark::State& state) {
  const auto input = geometric_input(static_cast<std::size_t>(state.range(0)), 0.5);
  std::vector<std::uint64_t> work;
  for (auto _ : state) {
    work = input;
    benchmark::DoNotOptimize(paramsort::textbook_selection_sort_in_place(std::span(work)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TextbookSelectionSort)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_CountInversions(benchmark::State& state) {
  const auto input = geometric_input(static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        paramsort::count_inversions(std::span<const std::uint64_t>(input)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountInversions)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

}  // namespace
