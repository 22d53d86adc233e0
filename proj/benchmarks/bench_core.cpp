#include <benchmark/benchmark.h>

#include "scs/fock.hpp"
#include "scs/model.hpp"
#include "scs/overlap.hpp"
#include "scs/position.hpp"

namespace {

using namespace scs;

ModelParams bench_model() {
  ModelParams mp;
  mp.gamma = 0.1;
  mp.l = std::sqrt(2.0);
  return mp;
}

EvolvedParams bench_state() { return make_snapshot({1.5, -0.8}, {0.4, 0.3}, 0.2); }

void BM_EvolveClosedForm(benchmark::State& state) {
  const auto mp = bench_model();
  const auto ic = InitialConditions::from_squeeze(0.5, complexd{0.0, 1.0});
  double t = 0.0;
  for (auto _ : state) {
    t += 0.001;
    benchmark::DoNotOptimize(evolve_closed_form(mp, ic, t));
  }
}
BENCHMARK(BM_EvolveClosedForm);

void BM_EvolveOde(benchmark::State& state) {
  const auto mp = bench_model();
  const auto ic = InitialConditions::from_squeeze(0.5, complexd{0.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(evolve_ode(mp, ic, 5.0, 1e-10));
}
BENCHMARK(BM_EvolveOde);

void BM_CoeffsClosedForm(benchmark::State& state) {
  const auto ep = bench_state();
  for (auto _ : state) benchmark::DoNotOptimize(coeffs_closed_form(ep));
}
BENCHMARK(BM_CoeffsClosedForm);

void BM_CoeffsRecurrence(benchmark::State& state) {
  const auto ep = bench_state();
  for (auto _ : state) benchmark::DoNotOptimize(coeffs_recurrence(ep));
}
BENCHMARK(BM_CoeffsRecurrence);

void BM_Wavefunction(benchmark::State& state) {
  const auto mp = bench_model();
  const auto ep = bench_state();
  const auto grid = auto_grid(ep, mp, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scs_wavefunction(ep, mp, grid));
}
BENCHMARK(BM_Wavefunction)->Arg(256)->Arg(1024)->Arg(4096);

void BM_WavefunctionBasisSum(benchmark::State& state) {
  const auto mp = bench_model();
  const auto ep = bench_state();
  const auto grid = auto_grid(ep, mp, 1024);
  for (auto _ : state) benchmark::DoNotOptimize(scs_wavefunction_basis_sum(ep, mp, grid));
}
BENCHMARK(BM_WavefunctionBasisSum);

void BM_Completeness(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        completeness_check(complexd{0.4, 0.0}, 1.0, 8, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Completeness)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
