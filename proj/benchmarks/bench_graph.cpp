#include <benchmark/benchmark.h>

#include "c4ex/graph.hpp"
#include "c4ex/lemmas.hpp"
#include "c4ex/polarity.hpp"

namespace {

c4ex::Graph polarity(std::int64_t q) { return c4ex::polarity_graph(c4ex::make_field(*c4ex::is_prime_power(q))); }

void BM_C4Check(benchmark::State& state) {
  const auto g = polarity(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c4ex::is_c4_free(g));
  state.counters["n"] = g.order();
}
BENCHMARK(BM_C4Check)->Arg(16)->Arg(49)->Arg(127)->Unit(benchmark::kMillisecond);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const auto g = polarity(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c4ex::graph6_decode(c4ex::graph6_encode(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(16)->Arg(49)->Unit(benchmark::kMicrosecond);

void BM_LemmaFN(benchmark::State& state) {
  const auto q = static_cast<int>(state.range(0));
  const auto g = polarity(q);
  for (auto _ : state) {
    for (c4ex::Vertex v = 0; v < g.order(); ++v) benchmark::DoNotOptimize(c4ex::check_lemma_fN(g, q, v));
  }
  state.SetItemsProcessed(state.iterations() * g.order());
}
BENCHMARK(BM_LemmaFN)->Arg(7)->Arg(16)->Arg(31)->Unit(benchmark::kMillisecond);

}  // namespace
