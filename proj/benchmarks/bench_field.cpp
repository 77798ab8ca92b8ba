#include <benchmark/benchmark.h>

#include "c4ex/gf.hpp"
#include "c4ex/polarity.hpp"

namespace {

void BM_MakeField(benchmark::State& state) {
  const auto pp = *c4ex::is_prime_power(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c4ex::make_field(pp));
}
BENCHMARK(BM_MakeField)->Arg(127)->Arg(1024)->Arg(8192);

void BM_FieldMulAdd(benchmark::State& state) {
  const auto field = c4ex::make_field(*c4ex::is_prime_power(state.range(0)));
  const auto q = static_cast<c4ex::FieldTable::Element>(field.size());
  c4ex::FieldTable::Element acc = 1;
  for (auto _ : state) {
    for (c4ex::FieldTable::Element a = 1; a < q; ++a) acc = field.add(field.mul(acc, a), a);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (q - 1));
}
BENCHMARK(BM_FieldMulAdd)->Arg(127)->Arg(1024)->Arg(8192);

void BM_PolarityGraph(benchmark::State& state) {
  const auto field = c4ex::make_field(*c4ex::is_prime_power(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(c4ex::polarity_graph(field));
}
BENCHMARK(BM_PolarityGraph)->Arg(16)->Arg(49)->Arg(127)->Unit(benchmark::kMillisecond);

}  // namespace
