#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "iqconc/assist/assist.hpp"
#include "iqconc/bases/bases.hpp"
#include "iqconc/perc/percolation.hpp"
#include "iqconc/qcore/eigen.hpp"
#include "iqconc/qcore/measures.hpp"
#include "iqconc/swap/swap.hpp"

using namespace iqconc;

namespace {

qcore::Matrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  qcore::Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = {g(rng), g(rng)};
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

void BM_HermitianEigenvalues(benchmark::State& state) {
  const auto h = random_hermitian(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(qcore::hermitian_eigenvalues(h));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(2)->Arg(4)->Arg(8);

void BM_WoottersConcurrence(benchmark::State& state) {
  const auto s = assist::canonical_to_state({0.6, 0.2, 0.3, 0.5, std::sqrt(0.26), 0.7});
  const auto rho = qcore::partial_trace(s, {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(qcore::wootters_concurrence(rho));
}
BENCHMARK(BM_WoottersConcurrence);

void BM_SwapMeasureGw(benchmark::State& state) {
  const auto basis = bases::gw_basis();
  const auto phi = swap::TwoQubitPhi::from_phi1(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(swap::swap_measure(phi, basis));
}
BENCHMARK(BM_SwapMeasureGw);

void BM_OptimizeQubitBasis(benchmark::State& state) {
  const auto s = assist::slice_to_state({0.5, std::sqrt(0.39), 0.6});
  for (auto _ : state) benchmark::DoNotOptimize(assist::optimize_qubit_basis(s, 0));
}
BENCHMARK(BM_OptimizeQubitBasis)->Unit(benchmark::kMillisecond);

void BM_SitePercolationTrial(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const auto g = perc::contract_to_triangular(perc::build_honeycomb(L, L, perc::Boundary::kWrapHorizontal));
  std::uint64_t t = 0;
  for (auto _ : state) {
    perc::TrialRng rng(perc::derive_seed(1, 0, t++));
    benchmark::DoNotOptimize(perc::site_percolation_trial(g, 0.5, rng));
  }
}
BENCHMARK(BM_SitePercolationTrial)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_BondPercolationTrial(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const auto h = perc::build_honeycomb(L, L, perc::Boundary::kWrapHorizontal);
  std::uint64_t t = 0;
  for (auto _ : state) {
    perc::TrialRng rng(perc::derive_seed(1, 0, t++));
    benchmark::DoNotOptimize(perc::bond_percolation_trial(h, 0.65, rng));
  }
}
BENCHMARK(BM_BondPercolationTrial)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
