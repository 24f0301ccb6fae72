#include <benchmark/benchmark.h>

#include "sqrtatlas/branches.hpp"
#include "sqrtatlas/eig.hpp"
#include "sqrtatlas/expm.hpp"
#include "sqrtatlas/random.hpp"
#include "sqrtatlas/spectral.hpp"

namespace {

using namespace sqrtatlas;

Matrix seededMatrix(int n, std::uint64_t seed) { return randomInvertible(n, seed); }

void BM_Eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = seededMatrix(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(m));
}
BENCHMARK(BM_Eigenvalues)->Arg(4)->Arg(8)->Arg(16);

void BM_Expm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = 0.5 * seededMatrix(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(expm(m));
}
BENCHMARK(BM_Expm)->Arg(4)->Arg(8)->Arg(16);

void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // SPD input so the eigenstructure is benign at every size
  const Matrix g = seededMatrix(n, 11);
  const Matrix m = g * g.transpose() + static_cast<double>(n) * Matrix::identity(n);
  Tolerances tol;
  for (auto _ : state) benchmark::DoNotOptimize(rjsDecompose(m, tol));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumerateBranches(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = static_cast<double>(i + 1);
  Tolerances tol;
  const SpectralProfile profile = classifySpectrum(m, tol);
  for (auto _ : state) benchmark::DoNotOptimize(enumerateBranches(profile));
}
BENCHMARK(BM_EnumerateBranches)->Arg(4)->Arg(8)->Arg(12);

void BM_SampleBranch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix g = seededMatrix(n, 23);
  const Matrix m = g * g.transpose() + static_cast<double>(n) * Matrix::identity(n);
  Tolerances tol;
  const RjsDecomposition dec = rjsDecompose(m, tol);
  const BranchIndex idx = principalBranchIndex(dec.profile);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sampleBranch(dec, idx, seed++, tol));
}
BENCHMARK(BM_SampleBranch)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
