#include <benchmark/benchmark.h>

#include "c4ex/exact.hpp"

namespace {

void BM_ExC4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::int64_t nodes = 0;
  for (auto _ : state) {
    const auto result = c4ex::ex_c4(n);
    nodes = result.nodes_explored;
    benchmark::DoNotOptimize(result.value);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExC4)->DenseRange(8, 16, 4)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace
