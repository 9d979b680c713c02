#include <benchmark/benchmark.h>

#include <random>

#include "stirap/dynamics.hpp"
#include "stirap/entropy.hpp"

namespace {

using namespace stirap;

ComplexMatrix random_hermitian(std::size_t n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> normal;
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = normal(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

void BM_HermitianEigensystem(benchmark::State& state) {
  const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(m));
}
BENCHMARK(BM_HermitianEigensystem)->Arg(3)->Arg(9)->Arg(27)->Arg(81);

void BM_RK4Step(benchmark::State& state) {
  ModelParams p;
  auto psi = initial_state(p);
  for (auto _ : state) benchmark::DoNotOptimize(psi = step(psi, 0.5, 1e-4, p));
}
BENCHMARK(BM_RK4Step);

void BM_EvolveFigurePreset(benchmark::State& state) {
  ModelParams p;
  p.delta_tau = static_cast<double>(state.range(0));
  const auto grid = TimeGrid::default_for(p, 12000, 100);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(p, grid));
}
BENCHMARK(BM_EvolveFigurePreset)->Arg(0)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_SsiReport(benchmark::State& state) {
  ModelParams p;
  const auto frames = evolve(p, TimeGrid::default_for(p, 12000, 6000));
  const auto& mid = frames[1];
  for (auto _ : state) benchmark::DoNotOptimize(ssi_parameter(mid));
}
BENCHMARK(BM_SsiReport);

void BM_AllSubsystemEntropies(benchmark::State& state) {
  ModelParams p;
  const auto frames = evolve(p, TimeGrid::default_for(p, 12000, 6000));
  const auto rho = pure_density(frames[1].state);
  for (auto _ : state) benchmark::DoNotOptimize(SubsystemEntropies(rho));
}
BENCHMARK(BM_AllSubsystemEntropies);

void BM_GhzEqualityCondition(benchmark::State& state) {
  using enum SubsystemId;
  const auto rho = ghz_reduced_density();
  const Partition partition{{AtomA}, {AtomB}, {ModeA}};
  for (auto _ : state) benchmark::DoNotOptimize(equality_condition_check(rho, partition));
}
BENCHMARK(BM_GhzEqualityCondition);

}  // namespace

BENCHMARK_MAIN();
