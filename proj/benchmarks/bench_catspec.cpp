#include <benchmark/benchmark.h>

#include <vector>

#include "catspec/bounds.hpp"
#include "catspec/charpoly.hpp"
#include "catspec/oracle.hpp"

namespace {

using namespace catspec;

CaterpillarSpec spine(std::size_t k) {
  std::vector<LegCount> q(k);
  for (std::size_t i = 0; i < k; ++i) q[i] = (3 * i + 1) % 7;
  return CaterpillarSpec(q);
}

void BM_CharpolyRecursion(benchmark::State& state) {
  const auto spec = spine(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_p(spec));
}
BENCHMARK(BM_CharpolyRecursion)->RangeMultiplier(2)->Range(2, 64);

void BM_PMinus2Recursion(benchmark::State& state) {
  const auto spec = spine(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(p_minus2(spec));
}
BENCHMARK(BM_PMinus2Recursion)->RangeMultiplier(2)->Range(2, 64);

void BM_PMinus2Bareiss(benchmark::State& state) {
  const auto spec = spine(static_cast<std::size_t>(state.range(0)));
  const auto b = deradicalize(build_c(spec));
  for (auto _ : state) benchmark::DoNotOptimize(exact_det(b, BigInt(-2)));
}
BENCHMARK(BM_PMinus2Bareiss)->RangeMultiplier(2)->Range(2, 64);

void BM_CardanoRoots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cardano_roots(4, 9));
}
BENCHMARK(BM_CardanoRoots);

void BM_JacobiOnC2(benchmark::State& state) {
  const auto c = build_c(CaterpillarSpec({4, 9})).to_dense();
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigs(c));
}
BENCHMARK(BM_JacobiOnC2);

void BM_MuOracle(benchmark::State& state) {
  const auto spec = spine(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mu_oracle(spec));
}
BENCHMARK(BM_MuOracle)->Arg(4)->Arg(10)->Arg(20);

void BM_BoundsReport(benchmark::State& state) {
  const auto spec = spine(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bounds_report(spec));
}
BENCHMARK(BM_BoundsReport)->Arg(4)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
