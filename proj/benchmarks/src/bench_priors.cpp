#include <benchmark/benchmark.h>

#include <bayesreg/distributions.hpp>
#include <bayesreg/priors.hpp>

using namespace bayesreg;

namespace {

void BM_HorseshoeDensity(benchmark::State& state) {
  const double beta = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(horseshoe_density_quadrature(1.0, beta, 1e-10));
}
BENCHMARK(BM_HorseshoeDensity)->Arg(1)->Arg(100)->Arg(10000);

void BM_LaplaceMixture(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(laplace_mixture_check(1.0, 1.0, 0.7));
}
BENCHMARK(BM_LaplaceMixture);

void BM_InverseGaussian(benchmark::State& state) {
  RngStream rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(sample_inverse_gaussian(rng, 1.0, 1.0));
}
BENCHMARK(BM_InverseGaussian);

void BM_InverseGamma(benchmark::State& state) {
  RngStream rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(sample_inverse_gamma(rng, 3.0, 2.0));
}
BENCHMARK(BM_InverseGamma);

}  // namespace

BENCHMARK_MAIN();
