#include <benchmark/benchmark.h>

#include "sw/experiments.hpp"
#include "sw/replicas.hpp"
#include "sw/samplers.hpp"
#include "sw/schnyder.hpp"

using namespace sw;

// one replica: sample T_n^1, build its maximal wood, return the red forest depth sum
static long long replica(std::uint64_t seed, int r, int n) {
  Rng g = replica_rng(seed, "bench", r);
  Triangulation t = sample_uniform(1, n, g);
  Wood w = peel_finite(t);
  long long s = 0;
  for (int v = 0; v < t.nv(); ++v) s += static_cast<long long>(path_from(t, w, v, kRed).size());
  return s;
}

static void BM_finite_woods(benchmark::State& st) {
  const int jobs = static_cast<int>(st.range(0));
  const int n = static_cast<int>(st.range(1));
  for (auto _ : st) {
    auto v = run_replicas(32, jobs, [&](int r) { return replica(1, r, n); });
    benchmark::DoNotOptimize(v.data());
  }
  st.counters["jobs"] = jobs;
}
BENCHMARK(BM_finite_woods)->Args({1, 200})->Args({2, 200})->Args({4, 200})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_strip(benchmark::State& st) {
  const int jobs = static_cast<int>(st.range(0));
  StripConfig cfg;
  cfg.budget = 1000;
  for (auto _ : st) {
    auto s = strip_consistency(3, cfg, 16, jobs);
    benchmark::DoNotOptimize(s.agree);
  }
}
BENCHMARK(BM_strip)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
