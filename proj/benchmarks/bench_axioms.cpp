#include <benchmark/benchmark.h>

#include "ybt/optable.hpp"
#include "ybt/sigma.hpp"

namespace {

ybt::OpTable conj_s4() {
  return ybt::make_conjugation_quandle(ybt::make_symmetric_group(4));
}

void BM_CheckShelf(benchmark::State& state) {
  const auto op = conj_s4();  // 24 elements, 24^3 triples per pass
  for (auto _ : state) benchmark::DoNotOptimize(ybt::check_shelf(op).ok);
}
BENCHMARK(BM_CheckShelf);

void BM_CheckQuandle(benchmark::State& state) {
  const auto op = conj_s4();
  for (auto _ : state) benchmark::DoNotOptimize(ybt::check_quandle(op).ok);
}
BENCHMARK(BM_CheckQuandle);

void BM_CheckBraided(benchmark::State& state) {
  const auto sigma = ybt::sigma_from_shelf(conj_s4());
  for (auto _ : state) benchmark::DoNotOptimize(ybt::check_braided(sigma).ok);
}
BENCHMARK(BM_CheckBraided);

void BM_CheckBirack(benchmark::State& state) {
  const auto sigma = ybt::sigma_from_shelf(conj_s4());
  for (auto _ : state)
    benchmark::DoNotOptimize(ybt::check_birack(sigma).is_birack);
}
BENCHMARK(BM_CheckBirack);

void BM_StructureRack(benchmark::State& state) {
  const auto sigma = ybt::sigma_from_shelf(conj_s4());
  for (auto _ : state)
    benchmark::DoNotOptimize(ybt::structure_rack(sigma).size());
}
BENCHMARK(BM_StructureRack);

}  // namespace

BENCHMARK_MAIN();
