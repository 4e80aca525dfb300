#include <benchmark/benchmark.h>

#include <random>

#include "torica/coxring.hpp"
#include "torica/groebner.hpp"
#include "torica/hodge.hpp"
#include "torica/lattice.hpp"

using namespace torica;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng() % 201) - 100;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_MonomialBasis(benchmark::State& state) {
  const Fan fan = projective_space(4);
  const std::vector<std::int64_t> b{state.range(0), 0, 0, 0, 0};
  for (auto _ : state) {
    // A fresh variety each time so the per-class cache does not hide the work.
    const ToricVariety X(fan);
    benchmark::DoNotOptimize(X.monomial_basis(X.class_of(b)).size());
  }
}
BENCHMARK(BM_MonomialBasis)->Arg(5)->Arg(10);

static void BM_QuinticJacobianDims(benchmark::State& state) {
  const ToricVariety X(projective_space(4));
  GradedPolynomial::Terms t;
  for (std::size_t i = 0; i < 5; ++i) {
    Exponent a(5, 0);
    a[i] = 5;
    t[a] = 1;
  }
  const auto f = make_polynomial(X, X.class_of(std::vector<std::int64_t>{5, 0, 0, 0, 0}), t);
  for (auto _ : state) {
    HodgeEngine e(X, f);
    benchmark::DoNotOptimize(e.dim_R(e.shifted(2)));
    benchmark::DoNotOptimize(e.dim_R(e.shifted(3)));
  }
}
BENCHMARK(BM_QuinticJacobianDims)->Unit(benchmark::kMillisecond);

static void BM_Buchberger(benchmark::State& state) {
  const std::size_t n = 3;
  const auto x = MultiPoly::variable(n, 0), y = MultiPoly::variable(n, 1), z = MultiPoly::variable(n, 2);
  const std::vector<MultiPoly> gens{x * x * y - z * z * z, y * y * z - x * x * x, z * z * x - y * y * y};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens).generators.size());
}
BENCHMARK(BM_Buchberger)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
