#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "amgm/gap_search.hpp"
#include "amgm/holder.hpp"
#include "amgm/means.hpp"
#include "amgm/refined_bounds.hpp"

namespace {

amgm::WeightedSample random_sample(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  std::vector<double> x(n);
  for (double& v : x) v = d(rng);
  return amgm::WeightedSample::uniform(x);
}

void BM_GeometricMean(benchmark::State& state) {
  const auto ws = random_sample(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(amgm::geometric_mean(ws));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeometricMean)->RangeMultiplier(16)->Range(8, 1 << 20);

void BM_AmgmGap(benchmark::State& state) {
  const auto ws = random_sample(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(amgm::amgm_gap(ws));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AmgmGap)->RangeMultiplier(16)->Range(8, 1 << 20);

void BM_VerifyChain(benchmark::State& state) {
  const auto ws = random_sample(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(amgm::verify_chain(ws));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VerifyChain)->Arg(2)->Arg(10)->Arg(1000);

void BM_RefinedHolder(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(0.01, 5.0);
  std::vector<amgm::DiscretizedFunction> fs;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> v(len);
    for (double& x : v) x = d(rng);
    fs.push_back(amgm::DiscretizedFunction::on_uniform_grid(v));
  }
  const amgm::ExponentTuple ps({3.0, 3.0, 3.0});
  for (auto _ : state) benchmark::DoNotOptimize(amgm::refined_holder(fs, ps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RefinedHolder)->Arg(64)->Arg(4096);

void BM_MaximizeRatio(benchmark::State& state) {
  amgm::SearchConfig cfg;
  cfg.n = 3;
  cfg.delta = 0.05;
  cfg.restarts = 4;
  cfg.iterations = 200;
  cfg.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(amgm::maximize_ratio(cfg));
}
BENCHMARK(BM_MaximizeRatio)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
