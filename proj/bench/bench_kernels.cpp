#include <benchmark/benchmark.h>

#include "ade/gamma_group.hpp"
#include "ade/group_kernels.hpp"

using namespace ade;

namespace {

const GammaGroup& e8() {
  static const GammaGroup g = enumerate(DynkinType(Family::E, 8));
  return g;
}

void BM_MultiplicationTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiplication_table(e8().elements, 1e-9));
}
BENCHMARK(BM_MultiplicationTable)->Unit(benchmark::kMillisecond);

void BM_MultiplicationTableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiplication_table_serial(e8().elements, 1e-9));
}
BENCHMARK(BM_MultiplicationTableSerial)->Unit(benchmark::kMillisecond);

void BM_ClassConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::class_structure_constants(e8()));
}
BENCHMARK(BM_ClassConstants)->Unit(benchmark::kMicrosecond);

void BM_ClassConstantsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::class_structure_constants_serial(e8()));
}
BENCHMARK(BM_ClassConstantsSerial)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
