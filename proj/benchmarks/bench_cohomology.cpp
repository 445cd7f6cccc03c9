#include <benchmark/benchmark.h>

#include "ybt/cohomology.hpp"
#include "ybt/optable.hpp"

namespace {

void BM_DifferentialMatrix(benchmark::State& state) {
  const auto cx = ybt::Complex::rack(ybt::make_alexander_quandle(5, 2));
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cx.matrix(degree).rows());
}
BENCHMARK(BM_DifferentialMatrix)->Arg(2)->Arg(3);

void BM_QuandleCohomology(benchmark::State& state) {
  const auto cx = ybt::Complex::rack(ybt::make_alexander_quandle(3, 2),
                                     ybt::Subspace::quandle_degenerate);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cx.cohomology(degree, 3).factors.size());
}
BENCHMARK(BM_QuandleCohomology)->Arg(2)->Arg(3);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto cx = ybt::Complex::rack(ybt::make_alexander_quandle(3, 2));
  const auto matrix = cx.matrix(3);  // 81 x 27
  for (auto _ : state)
    benchmark::DoNotOptimize(ybt::smith_normal_form(matrix).rank);
}
BENCHMARK(BM_SmithNormalForm);

void BM_CocycleBasis(benchmark::State& state) {
  const auto cx = ybt::Complex::rack(ybt::make_alexander_quandle(3, 2),
                                     ybt::Subspace::quandle_degenerate);
  for (auto _ : state)
    benchmark::DoNotOptimize(cx.cocycle_basis(3, 3).size());
}
BENCHMARK(BM_CocycleBasis);

}  // namespace

BENCHMARK_MAIN();
