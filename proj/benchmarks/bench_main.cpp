#include <benchmark/benchmark.h>

#include <random>

#include "toruscm/exactla.hpp"
#include "toruscm/section4.hpp"
#include "toruscm/valattice.hpp"

using namespace toruscm;

static void BM_IsolateRoots(benchmark::State& state) {
  // Cyclotomic-like polynomial x^n - x - 1.
  const int n = static_cast<int>(state.range(0));
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[0] = -1;
  c[1] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  Poly p(c);
  for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(p, pow2(-64)));
}
BENCHMARK(BM_IsolateRoots)->Arg(4)->Arg(8)->Arg(12);

static void BM_Hnf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-50, 50);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16);

static void BM_CyclotomicCmTorus(benchmark::State& state) {
  auto in = zeta5_cm_input();
  for (auto _ : state) benchmark::DoNotOptimize(cm_torus(in));
}
BENCHMARK(BM_CyclotomicCmTorus)->Unit(benchmark::kMillisecond);

static void BM_CyclotomicChiral(benchmark::State& state) {
  auto d = cyclotomic_data();
  auto p = cyclotomic_mirror(d);
  auto L = build_pairing_lattice(p.left.torus, p.left.kahler);
  for (auto _ : state) benchmark::DoNotOptimize(chiral_sublattice(L));
}
BENCHMARK(BM_CyclotomicChiral)->Unit(benchmark::kMillisecond);

static void BM_Section4Demo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(section4_demo(20, 1));
}
BENCHMARK(BM_Section4Demo)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
