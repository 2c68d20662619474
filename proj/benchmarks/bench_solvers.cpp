#include <random>

#include <benchmark/benchmark.h>

#include "bosebounds/bounds.hpp"
#include "bosebounds/generalized_eigen.hpp"
#include "bosebounds/hartree.hpp"
#include "bosebounds/hylleraas.hpp"
#include "bosebounds/system.hpp"

namespace bb = bosebounds;

static void BM_HylleraasAssemble(benchmark::State& state) {
  const bb::HylleraasBasis basis{2.0, static_cast<int>(state.range(0))};
  const bb::TwoBodyProblem helium{2.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(bb::assemble(basis, helium));
  state.counters["basis"] = static_cast<double>(basis.size());
}
BENCHMARK(BM_HylleraasAssemble)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_HylleraasFixedAlpha(benchmark::State& state) {
  bb::TwoBodyOptions options;
  options.omega = static_cast<int>(state.range(0));
  options.alpha = 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(bb::solve_two_body({2.0, 1.0}, options).energy);
}
BENCHMARK(BM_HylleraasFixedAlpha)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_GeneralizedEigen(benchmark::State& state) {
  const auto n = state.range(0);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n), b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = g(rng), b(i, j) = g(rng);
  const Eigen::MatrixXd h = a + a.transpose();
  const Eigen::MatrixXd s = b * b.transpose() + Eigen::MatrixXd::Identity(n, n) * static_cast<double>(n);
  for (auto _ : state) benchmark::DoNotOptimize(bb::smallest_generalized_eigenpair(h, s).value);
}
BENCHMARK(BM_GeneralizedEigen)->RangeMultiplier(2)->Range(16, 128);

static void BM_HartreeScf(benchmark::State& state) {
  bb::ScfOptions options;
  options.grid.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bb::scf_solve(bb::coulomb_limit_coeffs(), options).energy);
}
BENCHMARK(BM_HartreeScf)->Arg(2000)->Arg(6000)->Unit(benchmark::kMillisecond);

static void BM_PairDecomposition(benchmark::State& state) {
  const auto sys = bb::reduce({bb::Family::coulomb_atom, static_cast<int>(state.range(0))});
  std::mt19937_64 rng(11);
  const auto x = bb::random_phase_point(sys.n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bb::pair_terms(sys, x));
}
BENCHMARK(BM_PairDecomposition)->Arg(4)->Arg(10)->Arg(50);

static void BM_Telescope(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bb::telescope(bb::Family::coulomb_atom, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Telescope)->Arg(10)->Arg(50);
BENCHMARK_MAIN();
