#include <benchmark/benchmark.h>

#include "grlab/ainfty.hpp"
#include "grlab/generators.hpp"
#include "grlab/holder.hpp"
#include "grlab/oscillation.hpp"

using namespace grlab;

static WeightedGrid random_grid(std::vector<std::size_t> shape) {
  return gen::generate({gen::RandomValues{1, 1.0}, gen::RandomWeight{2, 1.0}, std::move(shape)});
}

static void BM_CubeMass2D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto wg = random_grid({n, n});
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t side = 1 + i % n;
    const Cube q{{(i * 7) % (n - side + 1), (i * 13) % (n - side + 1)}, side};
    benchmark::DoNotOptimize(wg.cube_mass(q));
    ++i;
  }
}
BENCHMARK(BM_CubeMass2D)->Arg(64)->Arg(1024);

// every interval of an N-cell line, threshold-index path
static void BM_GrEpsilon1D(benchmark::State& state) {
  const auto wg = random_grid({static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(gr_epsilon(wg, EnumerationMode::all(), 1).epsilon);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GrEpsilon1D)->RangeMultiplier(2)->Range(128, 2048)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_GrEpsilon2DDyadic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto wg = random_grid({n, n});
  for (auto _ : state) benchmark::DoNotOptimize(gr_epsilon(wg, EnumerationMode::dyadic(), 1).epsilon);
}
BENCHMARK(BM_GrEpsilon2DDyadic)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_AlphaProfile1D(benchmark::State& state) {
  const auto wg = random_grid({static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(alpha_profile(wg, 0.5, EnumerationMode::all(), 1).alpha_star);
}
BENCHMARK(BM_AlphaProfile1D)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_RhConstant1D(benchmark::State& state) {
  const auto wg = random_grid({static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(rh_constant(wg, 2.5, EnumerationMode::all(), 1).c_hat);
}
BENCHMARK(BM_RhConstant1D)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_OptimizeExponent(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimize_rh_exponent(0.5, 1.0).p_star);
}
BENCHMARK(BM_OptimizeExponent);
BENCHMARK_MAIN();
