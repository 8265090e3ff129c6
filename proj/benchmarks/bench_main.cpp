#include <benchmark/benchmark.h>

#include "irtr/holevo.hpp"
#include "irtr/model.hpp"
#include "irtr/oracles.hpp"
#include "irtr/protocol.hpp"
#include "irtr/quantum_info.hpp"
#include "irtr/rng.hpp"
#include "irtr/tradeoff.hpp"

namespace {

void BM_Hcrb(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(irtr::hcrb(0.5, 0.9));
  }
}
BENCHMARK(BM_Hcrb);

void BM_BoundaryCurve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irtr::boundary_curve(0.9, n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BoundaryCurve)->Range(1 << 8, 1 << 14)->Complexity();

void BM_TangencyGap(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(irtr::tangency_gap(0.5, 0.9, 10000));
  }
}
BENCHMARK(BM_TangencyGap);

void BM_GeometricTensorOracle(benchmark::State& state) {
  const irtr::EncodingParams enc{1.0, 0.7, +1};
  const irtr::SignalParams sig = irtr::SignalParams::from_rescaled(0.8, -1.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(irtr::geometric_tensor_oracle(enc, sig));
  }
}
BENCHMARK(BM_GeometricTensorOracle);

void BM_CfimScoreQuadrature(benchmark::State& state) {
  const irtr::SignalParams sig = irtr::SignalParams::from_rescaled(0.3, -0.7);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irtr::cfim_by_score_quadrature(2.6, 0.9, sig, n));
  }
}
BENCHMARK(BM_CfimScoreQuadrature)->Arg(128)->Arg(256)->Arg(384);

void BM_SampleOutcomes(benchmark::State& state) {
  const irtr::OutcomeDistribution dist = irtr::outcome_distribution(
      2.6, 0.9, irtr::SignalParams::from_rescaled(0.0, 0.0));
  irtr::RngState rng(1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irtr::sample_outcomes(dist, n, rng));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleOutcomes)->Arg(1 << 10)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
