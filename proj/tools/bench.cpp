#include <benchmark/benchmark.h>

#include "ringlab/constructions.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/kernels.hpp"

namespace {

using namespace ringlab;

// A table-free carrier (above the table threshold) so the kernels exercise
// the virtual-dispatch path they see on large quotients.
const FiniteRing& big_quotient() {
  static FiniteRing r = make_poly_quotient_int(make_zmod(5), {0, 0, 0, 0, 0, 1}, 8192);
  return r;
}

const FiniteRing& big_zmod() {
  static FiniteRing r = make_zmod(3600);
  return r;
}

void BM_idempotent_mask_serial(benchmark::State& state) {
  const FiniteRing& r = big_quotient();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::idempotent_mask_serial(r));
}
void BM_idempotent_mask_parallel(benchmark::State& state) {
  const FiniteRing& r = big_quotient();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::idempotent_mask_parallel(r));
}

void BM_nilpotent_mask_serial(benchmark::State& state) {
  const FiniteRing& r = big_quotient();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::nilpotent_mask_serial(r));
}
void BM_nilpotent_mask_parallel(benchmark::State& state) {
  const FiniteRing& r = big_quotient();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::nilpotent_mask_parallel(r));
}

void BM_unit_mask_serial(benchmark::State& state) {
  const FiniteRing& r = big_zmod();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::unit_mask_serial(r));
}
void BM_unit_mask_parallel(benchmark::State& state) {
  const FiniteRing& r = big_zmod();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::unit_mask_parallel(r));
}

void BM_regular_mask_serial(benchmark::State& state) {
  const FiniteRing& r = big_zmod();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::regular_mask_serial(r));
}
void BM_regular_mask_parallel(benchmark::State& state) {
  const FiniteRing& r = big_zmod();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::regular_mask_parallel(r));
}

void run_sweep(benchmark::State& state, Exec exec) {
  VerifyBounds bounds;
  bounds.zmod_max_n = 64;
  bounds.exec = exec;
  for (auto _ : state) {
    auto results = run_verify(Family::zmod, bounds);
    benchmark::DoNotOptimize(results);
  }
}
void BM_zmod_sweep_serial(benchmark::State& state) { run_sweep(state, Exec::serial); }
void BM_zmod_sweep_parallel(benchmark::State& state) { run_sweep(state, Exec::parallel); }

BENCHMARK(BM_idempotent_mask_serial);
BENCHMARK(BM_idempotent_mask_parallel);
BENCHMARK(BM_nilpotent_mask_serial);
BENCHMARK(BM_nilpotent_mask_parallel);
BENCHMARK(BM_unit_mask_serial);
BENCHMARK(BM_unit_mask_parallel);
BENCHMARK(BM_regular_mask_serial);
BENCHMARK(BM_regular_mask_parallel);
BENCHMARK(BM_zmod_sweep_serial);
BENCHMARK(BM_zmod_sweep_parallel);

}  // namespace

BENCHMARK_MAIN();
