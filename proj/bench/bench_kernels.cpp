// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "pcovers/arith/field.hpp"
#include "pcovers/curves/elliptic.hpp"
#include "pcovers/unipotent/orbits.hpp"

namespace {

void BM_Orbits(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  const pcov::Field f = pcov::Field::prime(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto r = parallel ? pcov::orbit_classes(n, f) : pcov::orbit_classes_serial(n, f);
    benchmark::DoNotOptimize(r.class_count);
  }
}

void BM_Scan(benchmark::State& state, bool parallel) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = parallel ? pcov::scan_curves(p) : pcov::scan_curves_serial(p);
    benchmark::DoNotOptimize(r.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Orbits, omp, true)->Args({3, 5})->Args({4, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Orbits, serial, false)->Args({3, 5})->Args({4, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scan, omp, true)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scan, serial, false)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
