#include <benchmark/benchmark.h>

#include "c4ex/certify.hpp"

namespace {

void BM_CertifyPoint(benchmark::State& state) {
  const auto which = state.range(0) == 0 ? c4ex::Which::kF : c4ex::Which::kG;
  const std::int64_t q = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(c4ex::certify_point(which, q, q / 50));
}
BENCHMARK(BM_CertifyPoint)->Args({0, 2000})->Args({0, 30000})->Args({1, 2000})->Args({1, 30000});

void BM_CertifyPointFast(benchmark::State& state) {
  const auto which = state.range(0) == 0 ? c4ex::Which::kF : c4ex::Which::kG;
  const std::int64_t q = state.range(1);
  const auto frac = c4ex::default_r_fraction(which);
  for (auto _ : state) benchmark::DoNotOptimize(c4ex::certify_point_fast(which, q, q / 50, frac));
}
BENCHMARK(BM_CertifyPointFast)->Args({0, 2000})->Args({0, 30000})->Args({1, 2000})->Args({1, 30000});

void BM_ThresholdScan(benchmark::State& state) {
  c4ex::ScanOptions opts;
  opts.q_end = state.range(0);
  opts.window = opts.q_end;
  for (auto _ : state) benchmark::DoNotOptimize(c4ex::find_threshold_q0(c4ex::Which::kG, opts));
}
BENCHMARK(BM_ThresholdScan)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

}  // namespace
