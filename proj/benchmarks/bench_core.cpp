// Microbenchmarks for the numerical kernels the suites lean on hardest:
// Hermitian eigendecomposition, operator norms across the dense/iterative
// switchover, section convolution, and Fourier coefficient extraction.

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "fellkit/coaction.hpp"
#include "fellkit/fixtures.hpp"
#include "fellkit/rng.hpp"
#include "fellkit/section.hpp"

namespace {

using namespace fellkit;

void bm_herm_eig(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const CMatrix m = rng.hermitian(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(herm_eig(m, false));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_herm_eig)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void bm_op_norm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const CMatrix m = rng.matrix(n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op_norm(m));
  }
  state.SetComplexityN(state.range(0));
}
// 32 and 48 run the dense path, 64 and 108 the iterative one.
BENCHMARK(bm_op_norm)->Arg(32)->Arg(48)->Arg(64)->Arg(108)->Complexity();

void bm_convolve(benchmark::State& state) {
  const BundlePtr b = std::make_shared<FellBundle>(
      builtin_bundle_by_name(state.range(0) == 0 ? "group:q8"
                                                 : "semidirect:s3"));
  Rng rng(3);
  const Section x = random_section(rng, b);
  const Section y = random_section(rng, b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve(x, y));
  }
}
BENCHMARK(bm_convolve)->Arg(0)->Arg(1);

void bm_fourier_coeff(benchmark::State& state) {
  const BundlePtr b = std::make_shared<FellBundle>(
      builtin_bundle_by_name(state.range(0) == 0 ? "group:d4"
                                                 : "semidirect:s3"));
  const Coaction c = dual_coaction(build_algebra(b));
  Rng rng(4);
  const CMatrix a = coaction_embedding(random_section(rng, b));
  int t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier_coeff(c, a, t));
    t = (t + 1) % c.group.order();
  }
}
BENCHMARK(bm_fourier_coeff)->Arg(0)->Arg(1);

void bm_group_convolution(benchmark::State& state) {
  const FiniteGroup g = builtin_group("q8");
  Rng rng(5);
  const ScalarFn f = random_scalar_fn(rng, g);
  const ScalarFn h = random_scalar_fn(rng, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve_scalar(g, f, h));
  }
}
BENCHMARK(bm_group_convolution);

}  // namespace

BENCHMARK_MAIN();
