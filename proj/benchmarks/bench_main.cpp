#include <benchmark/benchmark.h>

#include <map>

#include "gcolor/classical.hpp"
#include "gcolor/greedy.hpp"
#include "gcolor/instance.hpp"

namespace {

using namespace gcolor;

const Graph& planted(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, generate_planted(n, 3, 4.5, derive_instance_seed(0, n, 0)).graph).first;
  }
  return it->second;
}

void BM_Ramsey(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0)));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(ramsey(g, rng));
}
BENCHMARK(BM_Ramsey)->Arg(20)->Arg(40)->Arg(60);

void BM_SampleIs(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0)));
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sample_is(g, {}, rng));
}
BENCHMARK(BM_SampleIs)->Arg(20)->Arg(40)->Arg(60);

void BM_AnnealOne(benchmark::State& state) {
  const Qubo q = mis_qubo(planted(static_cast<std::size_t>(state.range(0))));
  const SaSchedule schedule;
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sa_anneal_one(q, schedule, rng));
}
BENCHMARK(BM_AnnealOne)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_GreedyClassical(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0)));
  const SamplerHandle sampler = make_classical_sampler();
  Rng rng(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_color(g, *sampler, static_cast<std::size_t>(state.range(1)), 10, rng));
  }
}
BENCHMARK(BM_GreedyClassical)->Args({20, 1})->Args({20, 30})->Args({60, 30})->Unit(benchmark::kMicrosecond);

void BM_GreedyQubo(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0)));
  const SamplerHandle sampler = make_qubo_sampler(std::make_shared<SimulatedAnnealingBackend>());
  Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_color(g, *sampler, static_cast<std::size_t>(state.range(1)), 10, rng));
  }
}
BENCHMARK(BM_GreedyQubo)->Args({20, 1})->Args({20, 30})->Args({60, 30})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
