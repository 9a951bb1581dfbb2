#include <benchmark/benchmark.h>

#include "fockcalc/boson.hpp"
#include "fockcalc/fock.hpp"
#include "fockcalc/vertex.hpp"

using namespace fockcalc;

static void BM_SchubertPlus(benchmark::State& state) {
  const int radius = static_cast<int>(state.range(0));
  const FockVector f = fock_basis(1, {3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(schubert_fock(SchubertKind::Plus, f, {0, radius}));
}
BENCHMARK(BM_SchubertPlus)->Arg(4)->Arg(8)->Arg(16);

static void BM_SchubertMinus(benchmark::State& state) {
  const FockVector f = fock_basis(0, {4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(schubert_fock(SchubertKind::Minus, f, full_minus_window(f)));
}
BENCHMARK(BM_SchubertMinus);

static void BM_Giambelli(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> parts;
  for (int k = n; k > 0; --k) parts.push_back(k);
  const Partition lambda{std::span<const int>(parts)};
  for (auto _ : state) benchmark::DoNotOptimize(giambelli(lambda, 0));
}
BENCHMARK(BM_Giambelli)->DenseRange(2, 4);

static void BM_DjkmGenerating(benchmark::State& state) {
  const int radius = static_cast<int>(state.range(0));
  const FockVector f = fock_basis(0, {2, 1});
  const Window w{-radius, radius};
  for (auto _ : state) benchmark::DoNotOptimize(djkm_generating(f, w, w));
}
BENCHMARK(BM_DjkmGenerating)->Arg(3)->Arg(5);

static void BM_Pieri(benchmark::State& state) {
  const ChargedSchur x = schur(Partition{4, 3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(h_mult(static_cast<int>(state.range(0)), x));
}
BENCHMARK(BM_Pieri)->Arg(2)->Arg(6);

BENCHMARK_MAIN();
