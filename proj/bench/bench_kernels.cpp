// Serial reference vs OpenMP kernels: exact elimination and the bracket
// columns that feed it when solving for higher Hamiltonians.
#include <benchmark/benchmark.h>

#include <random>

#include "ilwhodge/ilw.hpp"
#include "ilwhodge/linsolve.hpp"

using namespace ilwhodge;
using linsolve::Execution;

namespace {

linsolve::Matrix random_system(std::size_t n, std::vector<Rational>& b) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long> v(-20, 20);
  linsolve::Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(v(rng), 1 + (v(rng) + 20) % 7);
  b.assign(n, Rational());
  for (auto& x : b) x = Rational(v(rng));
  return a;
}

void BM_Solve(benchmark::State& state, Execution exec) {
  std::vector<Rational> b;
  const auto a = random_system(static_cast<std::size_t>(state.range(0)), b);
  for (auto _ : state) benchmark::DoNotOptimize(linsolve::solve(a, b, exec));
}

void BM_BracketColumns(benchmark::State& state, Execution exec) {
  const int g = static_cast<int>(state.range(0));
  const auto with = ilw::h1(g).functional;
  const auto dens = ilw::ansatz(3, g);
  for (auto _ : state) benchmark::DoNotOptimize(ilw::bracket_columns(dens, with, exec));
  state.counters["columns"] = static_cast<double>(dens.size());
}

void BM_HigherHamiltonian(benchmark::State& state, Execution exec) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ilw::higher_hamiltonian(3, g, {}, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Solve, serial, Execution::serial)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, parallel, Execution::parallel)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BracketColumns, serial, Execution::serial)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BracketColumns, parallel, Execution::parallel)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HigherHamiltonian, serial, Execution::serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HigherHamiltonian, parallel, Execution::parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
