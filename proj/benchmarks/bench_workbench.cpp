#include <benchmark/benchmark.h>

#include "postalg/catalog.hpp"
#include "postalg/decomposition.hpp"
#include "postalg/rota_baxter.hpp"

using namespace postalg;

static void BM_MakeG2(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_g2(FieldSpec::rationals()));
  }
}
BENCHMARK(BM_MakeG2);

static void BM_KillingSo7(benchmark::State& state) {
  Algebra so7 = make_classical_lie(LieFamily::so, 7, FieldSpec::rationals());
  for (auto _ : state) {
    benchmark::DoNotOptimize(bilinear_form(so7, FormKind::Killing));
  }
}
BENCHMARK(BM_KillingSo7);

static void BM_VerifyRbSo7(benchmark::State& state) {
  FieldSpec q = FieldSpec::rationals();
  Algebra so7 = make_classical_lie(LieFamily::so, 7, q);
  RBOperator r{Matrix::identity(21, q).scaled(Scalar(q, -1)), Scalar(q, 1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_rb(so7, r));
  }
}
BENCHMARK(BM_VerifyRbSo7);

static void BM_OnishchikInstance(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(onishchik_instance("B3=G2+D3"));
  }
}
BENCHMARK(BM_OnishchikInstance);

static void BM_SearchRbF5(benchmark::State& state) {
  FieldSpec f5 = FieldSpec::prime(5);
  Algebra a = make_diagonal_algebra(2, f5);
  Scalar one(f5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_rb_exhaustive(a, one));
  }
}
BENCHMARK(BM_SearchRbF5);

static void BM_TowerM2(benchmark::State& state) {
  FieldSpec q = FieldSpec::rationals();
  Algebra m2 = make_matrix_algebra(2, q);
  RBOperator r = from_splitting(
      m2,
      Subspace::span({unit_vec(4, 0, q), unit_vec(4, 1, q), unit_vec(4, 3, q)},
                     4, q),
      Subspace::span({unit_vec(4, 2, q)}, 4, q));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tower(m2, r, 4));
  }
}
BENCHMARK(BM_TowerM2);

BENCHMARK_MAIN();
