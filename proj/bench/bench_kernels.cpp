// Serial reference vs OpenMP-parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "ncortho/classical_cases.hpp"
#include "ncortho/hermitian_jacobi.hpp"
#include "ncortho/schur_params.hpp"

using namespace ncortho;

namespace {

GammaParams1D make_params(int horizon) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  GammaParams1D p(horizon);
  for (int k = 0; k < horizon; ++k)
    for (int j = k + 1; j <= horizon; ++j) p.set_gamma(k, j, cx(u(rng), u(rng)));
  return p;
}

JacobiFamily make_jacobi(int alphabet, int depth) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  std::uniform_real_distribution<double> diag(0.5, 1.5);
  JacobiFamily fam(alphabet, depth);
  std::int64_t size = 1;
  for (int n = 0; n < depth; ++n) {
    const std::int64_t rows = size * alphabet;
    for (int k = 1; k <= alphabet; ++k) {
      Matrix a(size, size);
      for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j) a(i, j) = cx(u(rng), u(rng));
      fam.set_A(n, k, ((a + a.adjoint()) / 2.0).eval());
    }
    Matrix stacked = Matrix::Zero(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      stacked(r, r) = diag(rng);
      for (Eigen::Index c = r + 1; c < rows; ++c) stacked(r, c) = cx(u(rng), u(rng));
    }
    for (int k = 1; k <= alphabet; ++k)
      fam.set_B(n, k, stacked.block(0, (k - 1) * size, rows, size).eval());
    size = rows;
  }
  return fam;
}

void bm_forward_serial(benchmark::State& state) {
  const GammaParams1D p = make_params(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ref::moments_from_params(p));
}

void bm_forward_parallel(benchmark::State& state) {
  const GammaParams1D p = make_params(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(moments_from_params(p));
}

void bm_weight_moments_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ref::weight_moments_quadrature(2.5, 2, static_cast<int>(state.range(0))));
}

void bm_weight_moments_parallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        weight_moments_quadrature(2.5, 2, static_cast<int>(state.range(0))));
}

void bm_gns_serial(benchmark::State& state) {
  const JacobiFamily fam = make_jacobi(2, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ref::moments_from_jacobi(fam, static_cast<int>(state.range(0))));
}

void bm_gns_parallel(benchmark::State& state) {
  const JacobiFamily fam = make_jacobi(2, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(moments_from_jacobi(fam, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(bm_forward_serial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_forward_parallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_weight_moments_serial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_weight_moments_parallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_gns_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_gns_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
