#include <benchmark/benchmark.h>

#include <random>

#include "isocrystal/congruence.hpp"
#include "isocrystal/global_datum.hpp"
#include "isocrystal/kottwitz_gl.hpp"
#include "isocrystal/kottwitz_unitary.hpp"
#include "isocrystal/lattice_isometry.hpp"
#include "isocrystal/trace_residue.hpp"

namespace {

using namespace isocrystal;

void BM_EnumerateGL(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GLDatum datum(3, n, {1, n / 2, n - 1});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bg_mu(datum));
}
BENCHMARK(BM_EnumerateGL)->DenseRange(3, 9, 2);

void BM_StratificationPoset(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GLDatum datum(1, n, {n / 2});
  for (auto _ : state) benchmark::DoNotOptimize(stratification_poset(datum));
}
BENCHMARK(BM_StratificationPoset)->DenseRange(4, 10, 2);

void BM_EnumerateUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UnitaryDatum datum(2, n, {1, n / 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bg_mu_unitary(datum));
}
BENCHMARK(BM_EnumerateUnitary)->DenseRange(3, 9, 2);

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> e(-10, 10), den(1, 10);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(Integer(e(rng)), Integer(den(rng)));
  return m;
}

void BM_RecoverTrace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const Matrix u = random_matrix(rng, n);
  Matrix v = random_matrix(rng, n);
  while (determinant(v).is_zero()) v = random_matrix(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(recover_trace(u, v));
}
BENCHMARK(BM_RecoverTrace)->DenseRange(2, 8, 2);

void BM_SolveIsometry(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Matrix g1 = Matrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, -3, 0}});
  Matrix s = Matrix::from_rows({{0, 2, -1, 1}, {-2, 0, 3, 1}, {1, -3, 0, 2}, {-1, -1, -2, 0}});
  const Matrix g2 = g1 + Rational(ppow(Integer(3), 7)) * s;
  const SymplecticLatticePair pair(Integer(3), 1, 7, g1, g2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_isometry(pair, k));
}
BENCHMARK(BM_SolveIsometry)->Arg(10)->Arg(20)->Arg(40);

void BM_RealLift(benchmark::State& state) {
  const LiftProblem prob{Polynomial({Rational(1), Rational(1), Rational(0), Rational(1)}), Integer(2), 2,
                         static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(find_real_rooted_lift(prob));
}
BENCHMARK(BM_RealLift)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
