// Microbenchmarks for the exact-arithmetic kernels and the full congruence
// pipeline. Sizes are chosen to match the ranges the CLI actually sees.

#include <benchmark/benchmark.h>

#include <random>

#include "gramclass/congruence.hpp"
#include "gramclass/exactmat.hpp"
#include "gramclass/quiver.hpp"
#include "gramclass/unitform.hpp"

using namespace gramclass;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Int(int(rng() % (2 * bound + 1))) - bound;
  return m;
}

IntMatrix random_skew(std::mt19937_64& rng, int n, int bound) {
  IntMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      z.at(i, j) = Int(int(rng() % (2 * bound + 1))) - bound;
      z.at(j, i) = -z.at(i, j);
    }
  return z;
}

void BM_hnf(benchmark::State& state) {
  const int n = int(state.range(0));
  std::mt19937_64 rng(42);
  IntMatrix m = random_matrix(rng, n, n + 2, 9);
  for (auto _ : state) {
    HnfResult h = hnf(m);
    benchmark::DoNotOptimize(h.H);
  }
}
BENCHMARK(BM_hnf)->Arg(4)->Arg(8)->Arg(12);

void BM_char_poly(benchmark::State& state) {
  const int n = int(state.range(0));
  std::mt19937_64 rng(43);
  IntMatrix m = random_matrix(rng, n, n, 5);
  for (auto _ : state) {
    PolyZ p = char_poly(m);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_char_poly)->Arg(4)->Arg(8)->Arg(12);

void BM_skew_normal_form(benchmark::State& state) {
  const int n = int(state.range(0));
  std::mt19937_64 rng(44);
  IntMatrix z = random_skew(rng, n, 9);
  for (auto _ : state) {
    SkewNormalForm f = skew_normal_form(z);
    benchmark::DoNotOptimize(f.P);
  }
}
BENCHMARK(BM_skew_normal_form)->Arg(4)->Arg(6)->Arg(8);

void BM_congruence_pipeline(benchmark::State& state) {
  const int m = int(state.range(0));
  const int n = int(state.range(1));
  Quiver q = random_quiver(m, n, 7);
  for (auto _ : state) {
    CongruenceCertificate cert = congruence_to_standard(q);
    benchmark::DoNotOptimize(cert.B);
  }
}
BENCHMARK(BM_congruence_pipeline)
    ->Args({4, 6})
    ->Args({6, 9})
    ->Args({8, 12});

}  // namespace

BENCHMARK_MAIN();
