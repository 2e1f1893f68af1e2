#include <benchmark/benchmark.h>

#include <bayesreg/risk_lab.hpp>

using namespace bayesreg;

namespace {

void BM_JamesSteinRisk(benchmark::State& state) {
  const SpikeSignal signal = SpikeSignal::make(100, 5, 10.0);
  const Estimator js{EstimatorKind::JamesStein, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_risk(RngStream(7), js, signal, 10000, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_JamesSteinRisk)->Arg(1)->Arg(4)->UseRealTime();

void BM_ThresholdExperiment(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(js_vs_threshold_experiment(RngStream(8), 100, 5, 50.0, 10000));
  }
}
BENCHMARK(BM_ThresholdExperiment);

}  // namespace

BENCHMARK_MAIN();
