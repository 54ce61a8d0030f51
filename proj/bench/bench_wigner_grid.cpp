#include <benchmark/benchmark.h>
#include <omp.h>

#include "blochwalk/walk.hpp"
#include "blochwalk/wigner.hpp"

using namespace blochwalk;

namespace {

DensityMatrix walked_state(int two_j, int sites, int steps) {
  const SpinQuantum j(two_j);
  const SiteIndexing indexing(sites);
  const auto schedule = WalkSchedule::site_aligned(indexing, steps);
  const auto states = evolve(CoinWalkerState::product(site_state(indexing, j, 0), 1.0, 0.0),
                             CoinPulse::hadamard(), schedule);
  return reduce_walker(states.back());
}

void BM_ReferenceGrid(benchmark::State& state) {
  const int two_j = static_cast<int>(state.range(0));
  const DensityMatrix rho = walked_state(two_j, 6, 2);
  const KernelWeights weights = kernel_weights(rho.spin());
  const GridResolution res = GridResolution::defaults(rho.spin(), 6);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_grid_reference(rho, res, weights));
}

void BM_HarmonicGrid(benchmark::State& state) {
  const int two_j = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const int sites = two_j >= 200 ? 40 : 6;
  const DensityMatrix rho = walked_state(two_j, sites, 2);
  const KernelWeights weights = kernel_weights(rho.spin());
  const GridResolution res = GridResolution::defaults(rho.spin(), sites);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(threads > 0 ? threads : saved);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_grid(rho, res, weights));
  omp_set_num_threads(saved);
  state.counters["threads"] = threads > 0 ? threads : saved;
}

}  // namespace

BENCHMARK(BM_ReferenceGrid)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HarmonicGrid)
    ->Args({10, 1})
    ->Args({50, 1})
    ->Args({50, 0})
    ->Args({200, 1})
    ->Args({200, 0})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
