#include <benchmark/benchmark.h>

#include "sqgol/classify.hpp"
#include "sqgol/engine.hpp"
#include "sqgol/matching.hpp"
#include "sqgol/pattern.hpp"
#include "sqgol/seeding.hpp"
#include "sqgol/statistics.hpp"

namespace {

using namespace sqgol;

template <Scalar T, Summation Order>
void BM_StepCloud(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // Settle into the cloud first so the occupancy skip has nothing to skip.
  Universe<T> u = run(random_init<T>(SeedConfig{0.2, 1, n, n}), 200, {}, Order);
  Universe<T> next;
  for (auto _ : state) {
    step_into(u, next, Order);
    std::swap(u, next);
    benchmark::DoNotOptimize(u.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * n);
}

template <Scalar T>
void BM_StepSparse(benchmark::State& state) {
  Universe<T> u = place_centered(Universe<T>(100, 100), qutub(0.5, 0.5, 0.5, 0.5));
  Universe<T> next;
  for (auto _ : state) {
    step_into(u, next);
    std::swap(u, next);
    benchmark::DoNotOptimize(u.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}

void BM_ClassifyQutub(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0)) / 100.0;
  const auto u = place_centered(Universe<double>(100, 100), qutub(a, a, a, a));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_outcome(u, ClassifierLimits{}).generations_run);
  }
}

void BM_MeanLiveness(benchmark::State& state) {
  const auto u = random_init<double>(SeedConfig{0.5, 1, 100, 100});
  for (auto _ : state) benchmark::DoNotOptimize(mean_liveness(u));
}

void BM_MatchPatterns(benchmark::State& state) {
  const auto c = classify_outcome(place_centered(Universe<double>(100, 100), qutub(0.59, 0.59, 0.59, 0.59)),
                                  ClassifierLimits{});
  const auto library = standard_library();
  for (auto _ : state) benchmark::DoNotOptimize(match_patterns(c.final_state, library, 0.01).size());
}

}  // namespace

BENCHMARK(BM_StepCloud<float, Summation::kRowMajor>)->Arg(100)->Arg(256);
BENCHMARK(BM_StepCloud<double, Summation::kRowMajor>)->Arg(100)->Arg(256);
BENCHMARK(BM_StepCloud<double, Summation::kSorted>)->Arg(100);
BENCHMARK(BM_StepSparse<float>);
BENCHMARK(BM_StepSparse<double>);
BENCHMARK(BM_ClassifyQutub)->Arg(57)->Arg(59)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeanLiveness);
BENCHMARK(BM_MatchPatterns)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
