#include <benchmark/benchmark.h>

#include "qsym/hermite.hpp"
#include "qsym/linalg.hpp"
#include "qsym/oracle.hpp"
#include "qsym/qcalculus.hpp"
#include "qsym/suites.hpp"
#include "qsym/symfun.hpp"

using namespace qsym;

static void BM_QPower(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(q_power(n));
}
BENCHMARK(BM_QPower)->DenseRange(4, 10, 2);

static void BM_TreeEnumerator(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(J_poly(n));
}
BENCHMARK(BM_TreeEnumerator)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_HermiteSeriesRoute(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(hermite_I_series_route(n));
}
BENCHMARK(BM_HermiteSeriesRoute)->DenseRange(4, 8, 2);

static void BM_GesselExp(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Series<QScalar> F = random_series(kDefaultSeed, 0, n);
  for (auto _ : st) benchmark::DoNotOptimize(gessel_exp(F));
}
BENCHMARK(BM_GesselExp)->DenseRange(4, 8, 2);

static void BM_Bareiss(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Matrix<RealXPoly> A = hermite_I_e_matrix(n);
  for (auto _ : st) benchmark::DoNotOptimize(det_bareiss(A));
}
BENCHMARK(BM_Bareiss)->DenseRange(4, 8, 2);
BENCHMARK_MAIN();
