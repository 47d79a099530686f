#include <vsft/models.hpp>

#include <benchmark/benchmark.h>

using namespace vsft;

namespace {

ExponentVector ev(std::initializer_list<Rational> xs) {
  std::vector<Rational> v(xs);
  return ExponentVector::from_dense(v);
}

// Search with witness on the dyadic line; k picks the depth.
void BM_DyadicMember(benchmark::State& state) {
  const auto s = dyadic(state.range(0)).monoid();
  const auto target = ev({Rational(1001, 256)});
  for (auto _ : state) benchmark::DoNotOptimize(s.member(target));
}
BENCHMARK(BM_DyadicMember)->Arg(4)->Arg(8);

// Yes/no answers from the cached rank-1 table.
void BM_ValuationContains(benchmark::State& state) {
  const auto s = rational_valuation(state.range(0)).monoid();
  std::int64_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(s.contains(ev({Rational(100 + (k++ % 200), 60)})));
}
BENCHMARK(BM_ValuationContains)->Arg(6)->Arg(7);

// Multi-axis search with negative entries.
void BM_FractionMonoidMember(benchmark::State& state) {
  const auto fm = fraction_monoid(state.range(0), 4);
  std::vector<Rational> t(static_cast<std::size_t>(state.range(0) + 1), 0);
  t[0] = 3;
  t[1] = -5;
  t[2] = 2;
  const auto target = ExponentVector::from_dense(t);
  for (auto _ : state) benchmark::DoNotOptimize(fm.monoid().member(target));
}
BENCHMARK(BM_FractionMonoidMember)->Arg(3)->Arg(5);

}  // namespace
