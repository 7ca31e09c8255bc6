#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qcoord/classical.hpp"
#include "qcoord/frobenius.hpp"
#include "qcoord/qmatrix.hpp"
#include "qcoord/qsln.hpp"

using namespace qcoord;

namespace {

std::vector<NcMonomial> random_words(int n, int degree, int count) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> letter(0, n * n - 1);
  std::vector<NcMonomial> out;
  for (int k = 0; k < count; ++k) {
    std::string codes;
    for (int i = 0; i < degree; ++i) codes.push_back(static_cast<char>(letter(rng)));
    out.emplace_back(codes);
  }
  return out;
}

}  // namespace

static void BM_BuildAlgebra(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_algebra(n));
}
BENCHMARK(BM_BuildAlgebra)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// args: n, degree, memoize
static void BM_NormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int degree = static_cast<int>(state.range(1));
  auto alg = build_algebra(n, state.range(2) != 0);
  auto words = random_words(n, degree, 32);
  for (auto _ : state) {
    alg.system().clear_cache();
    for (const auto& w : words) benchmark::DoNotOptimize(alg.normal_form(w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(words.size()));
}
BENCHMARK(BM_NormalForm)
    ->Args({2, 6, 0})
    ->Args({2, 6, 1})
    ->Args({3, 5, 0})
    ->Args({3, 5, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_SlnReduceDiagonalPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  SlnAlgebra<LaurentScalar> alg = build_sln(n);
  ExponentMatrix e = ExponentMatrix::identity(n).scaled(k);
  NcMonomial w = e.monomial();
  for (auto _ : state) {
    alg.clear_cache();
    benchmark::DoNotOptimize(alg.normal_form(w));
  }
}
BENCHMARK(BM_SlnReduceDiagonalPower)->Args({2, 4})->Args({2, 8})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_FrobeniusIdentities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    RootOfUnityContext ctx(n, m);
    benchmark::DoNotOptimize(check_power_identities(ctx));
  }
}
BENCHMARK(BM_FrobeniusIdentities)->Args({2, 3})->Args({2, 5})->Args({2, 7})->Args({3, 5})->Unit(benchmark::kMillisecond);

static void BM_HopfAxioms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_hopf_axioms(n));
}
BENCHMARK(BM_HopfAxioms)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_StatedMatrixIdentities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_stated_matrix_identities(n, 1, 100));
}
BENCHMARK(BM_StatedMatrixIdentities)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_DetExpansion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_det_expansion(n, 1, 100));
}
BENCHMARK(BM_DetExpansion)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
