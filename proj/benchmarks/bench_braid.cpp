#include <benchmark/benchmark.h>

#include "ybt/braid.hpp"
#include "ybt/optable.hpp"
#include "ybt/sigma.hpp"

namespace {

// Closure counting is an exhaustive fixed-point scan over S^strands.
void BM_ClosureCount(benchmark::State& state) {
  const auto sigma = ybt::sigma_from_shelf(
      ybt::make_conjugation_quandle(ybt::make_symmetric_group(4)));
  const auto word =
      ybt::parse_braid("1 2 -1 2 1 -2", static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ybt::coloring_count_closure(sigma, word));
}
BENCHMARK(BM_ClosureCount)->Arg(3)->Arg(4);

void BM_WeightPolynomial(benchmark::State& state) {
  const auto rack = ybt::make_alexander_quandle(9, 2);
  const auto sigma = ybt::sigma_from_shelf(rack);
  ybt::Cochain phi(2, 3, 9);
  for (long long r = 0; r < 81; ++r) phi.set_rank(r, r % 3);
  const auto word = ybt::parse_braid("1 2 1 -2 1 2", 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ybt::weight_polynomial_closure(sigma, phi, word).coloring_count);
}
BENCHMARK(BM_WeightPolynomial);

void BM_GuitarMap(benchmark::State& state) {
  const auto sigma = ybt::sigma_from_shelf(
      ybt::make_conjugation_quandle(ybt::make_symmetric_group(4)));
  std::vector<int> tuple = {3, 17, 5, 23, 11, 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(ybt::guitar_map(sigma, tuple).front());
}
BENCHMARK(BM_GuitarMap);

}  // namespace

BENCHMARK_MAIN();
