#include "hyperid/bruteforce.hpp"
#include "hyperid/harness.hpp"

#include <benchmark/benchmark.h>

using namespace hyperid;

namespace {

SuiteConfig bench_config(int samples) {
  SuiteConfig cfg;
  cfg.identities = {"gauss-2f1", "dixon", "phi65", "bailey-6psi6", "jackson-nt"};
  cfg.samples = samples;
  cfg.seed = 1;
  cfg.digits = 30;
  return cfg;
}

void BM_RunSuite(benchmark::State& state) {
  auto cfg = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg).passed);
}

void BM_RunSuiteSerial(benchmark::State& state) {
  auto cfg = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite_serial(cfg).passed);
}

const std::vector<dcomplex> kUppers{{0.5, 0.25}, 1.25};
const std::vector<dcomplex> kLowers{{17.5, -0.5}, 8.0};

void BM_BruteBilateral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_bilateral(kUppers, kLowers, 1.0, state.range(0)).value);
  state.SetItemsProcessed(state.iterations() * (2 * state.range(0) + 1));
}

void BM_BruteBilateralSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_bilateral_serial(kUppers, kLowers, 1.0, state.range(0)).value);
  state.SetItemsProcessed(state.iterations() * (2 * state.range(0) + 1));
}

}  // namespace

BENCHMARK(BM_RunSuite)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunSuiteSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteBilateral)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BruteBilateralSerial)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
