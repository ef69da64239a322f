#include <benchmark/benchmark.h>

#include <random>

#include "schemekit/catalan.hpp"
#include "schemekit/designs.hpp"
#include "schemekit/generators.hpp"
#include "schemekit/qpoly.hpp"
#include "schemekit/scheme.hpp"

using namespace schemekit;

static void BM_ValidateHamming(benchmark::State& state) {
  const auto rp = generators::hamming(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(scheme::validate_scheme(rp));
}
BENCHMARK(BM_ValidateHamming)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ValidateIcosahedron(benchmark::State& state) {
  const auto rp = generators::icosahedron();
  for (auto _ : state) benchmark::DoNotOptimize(scheme::validate_scheme(rp));
}
BENCHMARK(BM_ValidateIcosahedron)->Unit(benchmark::kMillisecond);

static void BM_KreinHamming(benchmark::State& state) {
  const auto sc = scheme::validate_scheme(generators::hamming(state.range(0), 2));
  for (auto _ : state) benchmark::DoNotOptimize(scheme::krein_parameters(sc));
}
BENCHMARK(BM_KreinHamming)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_StrengthBothRoutes(benchmark::State& state) {
  const auto sc = scheme::validate_scheme(generators::hamming(6, 2));
  const auto kt = scheme::krein_parameters(sc);
  const auto ord = qpoly::find_qpoly_orderings(kt, sc).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(designs::strength_by_moments(designs::embed(sc, ord), 12));
    benchmark::DoNotOptimize(designs::strength_by_krein(ord, 12));
  }
}
BENCHMARK(BM_StrengthBothRoutes)->Unit(benchmark::kMicrosecond);

static void BM_CatalanMatrix(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto w = catalan::random_weights(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalan::catalan_matrix(w));
}
BENCHMARK(BM_CatalanMatrix)->RangeMultiplier(2)->Range(2, 16);

static void BM_PathTable(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto w = catalan::random_weights(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalan::path_weight_table(w));
}
BENCHMARK(BM_PathTable)->DenseRange(2, 6);

static void BM_RecoverWeights(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto w = catalan::random_weights(rng, state.range(0));
  const auto b = catalan::catalan_numbers(w);
  const std::vector<exact::Rational> moments(b.begin() + 1, b.end());
  for (auto _ : state) benchmark::DoNotOptimize(catalan::recover_weights(moments, w.m));
}
BENCHMARK(BM_RecoverWeights)->RangeMultiplier(2)->Range(2, 16);
BENCHMARK_MAIN();
