// Microbenchmarks for the two frequency stages and the refinement step.
// Records are generated outside the timed loops with fixed seeds so runs
// are comparable across machines and commits.

#include <benchmark/benchmark.h>

#include <cstddef>

#include "fipeft/estimator.hpp"
#include "fipeft/levenberg.hpp"
#include "fipeft/lomb_scargle.hpp"
#include "fipeft/synth.hpp"

namespace {

fipeft::SampledSignal record_of_length(std::size_t n, double sigma) {
  fipeft::SynthConfig cfg;
  cfg.sigma = sigma;
  cfg.seed = 11;
  // Ten periods at f = 0.25; the rate realizes the requested length.
  cfg.sample_rate =
      static_cast<double>(n) * cfg.truth.frequency() / cfg.periods;
  return fipeft::generate(cfg);
}

void BM_CrossingInit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fipeft::SampledSignal s = record_of_length(n, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(fipeft::estimate_initial_params(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CrossingInit)->RangeMultiplier(2)->Range(80, 1280)->Complexity();

void BM_PeriodogramPeak(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fipeft::SampledSignal s = record_of_length(n, 1.0);
  const double a1 = fipeft::prepare_stats(s).a1_hat;
  for (auto _ : state)
    benchmark::DoNotOptimize(fipeft::peak_frequency(s, a1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PeriodogramPeak)
    ->RangeMultiplier(2)
    ->Range(80, 1280)
    ->Complexity();

void BM_SpikeRemoval(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fipeft::SampledSignal s = record_of_length(n, 3.5);
  const double a1 = fipeft::prepare_stats(s).a1_hat;
  for (auto _ : state)
    benchmark::DoNotOptimize(fipeft::remove_spikes(s, a1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpikeRemoval)->RangeMultiplier(2)->Range(80, 1280)->Complexity();

void BM_Refinement(benchmark::State& state) {
  const fipeft::SampledSignal s = record_of_length(800, 1.0);
  fipeft::SynthConfig cfg;
  fipeft::ModelParams init = cfg.truth;
  init.a3 *= 1.03;
  init.a1 += 0.5;
  for (auto _ : state)
    benchmark::DoNotOptimize(fipeft::lm_fit(s, init));
}
BENCHMARK(BM_Refinement);

}  // namespace

BENCHMARK_MAIN();
