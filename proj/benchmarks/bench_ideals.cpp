#include <vsft/models.hpp>

#include <benchmark/benchmark.h>

using namespace vsft;

namespace {

void BM_IdealPowerChar2(benchmark::State& state) {
  const auto m = char2_xy(state.range(0), 10);
  const auto i = m.ideal("I");
  for (auto _ : state) benchmark::DoNotOptimize(ideal_power(i, 3));
}
BENCHMARK(BM_IdealPowerChar2)->Arg(3)->Arg(5)->Arg(8);

void BM_IdealPowerIntModel(benchmark::State& state) {
  const auto m = int_plus_2x(state.range(0));
  const auto i = m.ideal("I");
  for (auto _ : state) benchmark::DoNotOptimize(ideal_power(i, 2));
}
BENCHMARK(BM_IdealPowerIntModel)->Arg(5)->Arg(10);

// Least VSFT index of the maximal ideal as the truncation grows.
void BM_NilpotencyFrobenius(benchmark::State& state) {
  const auto m = frobenius_quotient(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nilpotency_index(m.ideal("M"), m.ideal("zero"), 16));
}
BENCHMARK(BM_NilpotencyFrobenius)->DenseRange(2, 8, 2);

void BM_NilpotencyFractionMonoid(benchmark::State& state) {
  const auto m = fraction_monoid(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(nilpotency_index(m.ideal("I"), m.ideal("y"), 16));
}
BENCHMARK(BM_NilpotencyFractionMonoid)->DenseRange(2, 6, 2);

}  // namespace
