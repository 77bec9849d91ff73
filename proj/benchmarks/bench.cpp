#include <benchmark/benchmark.h>

#include "shuffle/charfn.hpp"
#include "shuffle/macdonald.hpp"
#include "shuffle/nalpha.hpp"

using namespace shuffle;

namespace {

static void BM_scalar_arith(benchmark::State& state) {
  QtScalar a = (QtScalar::q().pow(3) - 1) / (QtScalar::t() - 1);
  QtScalar b = (QtScalar::t().pow(2) + QtScalar::q()) / (QtScalar::q() + 1);
  for (auto _ : state) {
    QtScalar c = a * b + a / b - b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_scalar_arith);

static void BM_sweep(benchmark::State& state) {
  auto paths = DyckPath::all_full(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& pi : paths) {
      benchmark::DoNotOptimize(pi.zeta());
      benchmark::DoNotOptimize(pi.dinv());
      benchmark::DoNotOptimize(pi.bounce());
    }
}
BENCHMARK(BM_sweep)->Arg(6)->Arg(8);

static void BM_chi(benchmark::State& state) {
  auto paths = DyckPath::all_full(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& pi : paths) benchmark::DoNotOptimize(chi(pi));
}
BENCHMARK(BM_chi)->Arg(4)->Arg(5);

static void BM_chi_ops(benchmark::State& state) {
  auto paths = DyckPath::all_full(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& pi : paths) benchmark::DoNotOptimize(chi_ops(pi));
}
BENCHMARK(BM_chi_ops)->Arg(4)->Arg(5);

static void BM_nabla(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  // Warm the transition-matrix cache outside the loop.
  SymFunc en = SymFunc::single(Basis::e, Partition({n}));
  benchmark::DoNotOptimize(nabla(en));
  for (auto _ : state) benchmark::DoNotOptimize(nabla(en));
}
BENCHMARK(BM_nabla)->Arg(4)->Arg(5);

static void BM_dalpha_ops(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto alphas = Composition::all_of_size(n);
  for (auto _ : state)
    for (const auto& alpha : alphas)
      benchmark::DoNotOptimize(dalpha_ops(alpha));
}
BENCHMARK(BM_dalpha_ops)->Arg(3)->Arg(4);

static void BM_involution(benchmark::State& state) {
  VElem v = n_alpha(Composition({3, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(n_involution(v));
}
BENCHMARK(BM_involution);

}  // namespace

BENCHMARK_MAIN();
