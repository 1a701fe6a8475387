#include <benchmark/benchmark.h>

#include "xmodbar/bar.hpp"
#include "xmodbar/bibar.hpp"
#include "xmodbar/enumerate.hpp"
#include "xmodbar/examples.hpp"
#include "xmodbar/harness.hpp"

using namespace xmodbar;

namespace {

void BM_BuildBar(benchmark::State& state) {
  const CrossedModule f2 = examples::f2();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_bar_algebra(f2, depth));
}
BENCHMARK(BM_BuildBar)->DenseRange(1, 4);

void BM_VerifyBarF1(benchmark::State& state) {
  const BarAlgebra t = build_bar_algebra(examples::f1(), static_cast<std::size_t>(state.range(0)));
  const Policy p;
  for (auto _ : state) benchmark::DoNotOptimize(verify_bar(t, p));
}
BENCHMARK(BM_VerifyBarF1)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BarProduct(benchmark::State& state) {
  const CrossedModule f2 = examples::f2();
  const BarAlgebra t = build_bar_algebra(f2, 4);
  const Algebra& top = t.levels.back();
  Element a = top.carrier.zero();
  Element b = top.carrier.zero();
  for (std::size_t i = 0; i < 5; ++i) top.carrier.advance(a);
  for (std::size_t i = 0; i < 11; ++i) top.carrier.advance(b);
  for (auto _ : state) benchmark::DoNotOptimize(top(a, b));
}
BENCHMARK(BM_BarProduct);

void BM_EnumerateXMods(benchmark::State& state) {
  const auto m = static_cast<Residue>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_xmods(m, 1));
}
BENCHMARK(BM_EnumerateXMods)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VerifyBiBar(benchmark::State& state) {
  const XModMorphism inc = examples::f2_inclusion();
  const Policy p;
  for (auto _ : state) benchmark::DoNotOptimize(verify_bibar(build_bibar(inc, 2, 2), p));
}
BENCHMARK(BM_VerifyBiBar)->Unit(benchmark::kMillisecond);

void BM_CimFuzz(benchmark::State& state) {
  const Policy p;
  for (auto _ : state) benchmark::DoNotOptimize(cim_fuzz(20240917, static_cast<std::size_t>(state.range(0)), p));
}
BENCHMARK(BM_CimFuzz)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
