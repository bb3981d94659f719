#include <benchmark/benchmark.h>

#include "grlab/covering.hpp"
#include "grlab/generators.hpp"
#include "grlab/rearrangement.hpp"

using namespace grlab;

static void BM_Rearrangement(benchmark::State& state) {
  const auto wg = gen::generate({gen::RandomValues{3, 1.0}, gen::RandomWeight{4, 2.0},
                                 {static_cast<std::size_t>(state.range(0))}});
  for (auto _ : state) benchmark::DoNotOptimize(rearrangement(wg).total_mass());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rearrangement)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

static void BM_Covering2D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto wg = gen::generate({gen::RandomValues{5, 1.0}, gen::Uniform{}, {n, n}});
  const auto sf = rearrangement(wg);
  const auto e = level_set_above(wg, sf.evaluate(0.1 * wg.total_mass()));
  for (auto _ : state) benchmark::DoNotOptimize(build_covering(wg, e, 0.1, 0.3).cubes.size());
}
BENCHMARK(BM_Covering2D)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
