#include <benchmark/benchmark.h>

#include <bayesreg/samplers.hpp>

using namespace bayesreg;

namespace {

SufficientStats problem(Index n, Index p) {
  RngStream rng(1);
  MatrixXd x(n, p);
  VectorXd y(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < p; ++j) x(i, j) = 2.0 * rng.uniform() - 1.0;
    y(i) = x(i, 0) + rng.normal();
  }
  return SufficientStats::from(standardize(x, y));
}

void BM_LassoSweep(benchmark::State& state) {
  const SufficientStats stats = problem(200, state.range(0));
  RngStream rng(2);
  ChainState s = lasso_gibbs_init(stats);
  for (auto _ : state) {
    s = lasso_gibbs_step(rng, s, stats);
    benchmark::DoNotOptimize(s.beta.data());
  }
}
BENCHMARK(BM_LassoSweep)->Arg(10)->Arg(50)->Arg(200);

void BM_HorseshoeSweep(benchmark::State& state) {
  const SufficientStats stats = problem(200, state.range(0));
  RngStream rng(3);
  ChainState s = horseshoe_gibbs_init(stats);
  for (auto _ : state) {
    s = horseshoe_gibbs_step(rng, s, stats);
    benchmark::DoNotOptimize(s.beta.data());
  }
}
BENCHMARK(BM_HorseshoeSweep)->Arg(10)->Arg(50)->Arg(200);

void BM_SpikeSlabSweep(benchmark::State& state) {
  const SufficientStats stats = problem(200, state.range(0));
  RngStream rng(4);
  ChainState s = spike_slab_gibbs_init(stats);
  for (auto _ : state) {
    s = spike_slab_gibbs_step(rng, s, stats);
    benchmark::DoNotOptimize(s.beta.data());
  }
}
BENCHMARK(BM_SpikeSlabSweep)->Arg(10)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
