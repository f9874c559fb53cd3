#include <benchmark/benchmark.h>

#include <random>

#include "postalg/linalg.hpp"
#include "postalg/subspace.hpp"

using namespace postalg;

namespace {

Matrix random_matrix(int n, int m, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  Matrix out(n, m, FieldSpec::rationals());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      out.at(i, j) = Scalar(FieldSpec::rationals(), dist(rng));
    }
  }
  return out;
}

}  // namespace

static void BM_Rref(benchmark::State& state) {
  Matrix m = random_matrix(static_cast<int>(state.range(0)),
                           static_cast<int>(state.range(0)) + 4, 7u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_KernelImage(benchmark::State& state) {
  Matrix m = random_matrix(static_cast<int>(state.range(0)),
                           static_cast<int>(state.range(0)), 11u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_image(m));
  }
}
BENCHMARK(BM_KernelImage)->Arg(8)->Arg(16);

static void BM_CharPoly(benchmark::State& state) {
  Matrix m = random_matrix(static_cast<int>(state.range(0)),
                           static_cast<int>(state.range(0)), 13u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_poly(m));
  }
}
BENCHMARK(BM_CharPoly)->Arg(8)->Arg(16)->Arg(21);

static void BM_SubspaceIntersect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Subspace s = Subspace::row_space(random_matrix(n / 2, n, 17u));
  Subspace t = Subspace::row_space(random_matrix(n / 2, n, 19u));
  for (auto _ : state) {
    benchmark::DoNotOptimize(subspace_intersect(s, t));
  }
}
BENCHMARK(BM_SubspaceIntersect)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
