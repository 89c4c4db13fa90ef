// Serial reference vs OpenMP batch solver on the workloads the CLI runs:
// a Kerr trajectory and a batch of random states.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "majorana/batch.hpp"
#include "majorana/dynamics.hpp"

namespace {

using namespace majorana;

std::vector<PureState> kerr_batch(int cutoff, int points) {
  const auto sym = Symmetry::heisenberg_weyl(cutoff);
  const PureState start = coherent(sym, {2.0, 0.0});
  EvolutionSpec spec{1.0, 0.0, {}};
  std::vector<PureState> out;
  for (int i = 0; i < points; ++i) {
    out.push_back(kerr_evolve(start, spec, 2.0 * std::numbers::pi * i / points));
  }
  return out;
}

std::vector<PureState> random_batch(int cutoff, int count) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  const auto sym = Symmetry::heisenberg_weyl(cutoff);
  std::vector<PureState> out;
  for (int i = 0; i < count; ++i) {
    std::vector<cplx> amps(sym.dimension());
    for (auto& a : amps) a = {normal(rng), normal(rng)};
    out.push_back(from_amplitudes(sym, amps));
  }
  return out;
}

void BM_KerrSerial(benchmark::State& state) {
  const auto batch = kerr_batch(static_cast<int>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(stars_batch_serial(batch));
}

void BM_KerrParallel(benchmark::State& state) {
  const auto batch = kerr_batch(static_cast<int>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(stars_batch(batch));
}

void BM_RandomSerial(benchmark::State& state) {
  const auto batch = random_batch(static_cast<int>(state.range(0)), 128);
  for (auto _ : state) benchmark::DoNotOptimize(stars_batch_serial(batch));
}

void BM_RandomParallel(benchmark::State& state) {
  const auto batch = random_batch(static_cast<int>(state.range(0)), 128);
  for (auto _ : state) benchmark::DoNotOptimize(stars_batch(batch));
}

}  // namespace

BENCHMARK(BM_KerrSerial)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KerrParallel)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSerial)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomParallel)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
