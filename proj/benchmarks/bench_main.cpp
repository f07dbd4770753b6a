#include <benchmark/benchmark.h>

#include "selt/harness.hpp"
#include "selt/jdt.hpp"
#include "selt/ring.hpp"
#include "selt/slide_calc.hpp"

using namespace selt;

// Rectify every tableau of rho_n/rho_n carrying |rho_{n,m}| labels.
static void BM_RectifyStaircase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const auto tableaux = enumerate_selt(SkewShape(rho(n), rho(n)), rho_nm(n, m).size());
  for (auto _ : state) {
    for (const EdgeTableau& t : tableaux) benchmark::DoNotOptimize(rect(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(tableaux.size()));
}
BENCHMARK(BM_RectifyStaircase)->Args({3, 3})->Args({4, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_CountDBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_d(rho(n), rho_nm(n, m), rho(n)));
}
BENCHMARK(BM_CountDBruteForce)->Args({3, 2})->Args({4, 2})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_CountDStaircase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_d_staircase(n, n));
}
BENCHMARK(BM_CountDStaircase)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

// Uncached sigma-basis expansion of sigma_lambda * sigma_mu.
static void BM_ExpandProduct(benchmark::State& state) {
  const auto method = static_cast<SolveMethod>(state.range(0));
  const StrictPartition lambda{3, 1}, mu{3, 1};
  const RingElement x = sigma(lambda) * sigma(mu);
  for (auto _ : state) benchmark::DoNotOptimize(expand_in_sigma_basis(x, 8, method));
}
BENCHMARK(BM_ExpandProduct)
    ->Arg(static_cast<int>(SolveMethod::kLinearSystem))
    ->Arg(static_cast<int>(SolveMethod::kNormalForm))
    ->Unit(benchmark::kMillisecond);

static void BM_ConjectureSweep(benchmark::State& state) {
  SuiteOptions o;
  o.max_weight = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_conjecture(o));
}
BENCHMARK(BM_ConjectureSweep)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
