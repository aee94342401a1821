#include <benchmark/benchmark.h>

#include <random>

#include "multinv/classification.hpp"
#include "multinv/laurent.hpp"

using namespace multinv;

namespace {

std::vector<IntegerMatrix> a3_generators() {
  return {IntegerMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
          IntegerMatrix{{1, 0, -1}, {0, 1, -1}, {0, 0, -1}},
          IntegerMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
}

std::vector<IntegerVector> a3_base() {
  return {{-1, 0, 1}, {1, -1, 0}, {0, 0, -1}};
}

// Coxeter generators of the symmetric group on n letters.
std::vector<IntegerMatrix> permutation_generators(std::size_t n) {
  std::vector<IntegerMatrix> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntegerMatrix g = IntegerMatrix::identity(n);
    g(i, i) = 0;
    g(i + 1, i + 1) = 0;
    g(i, i + 1) = 1;
    g(i + 1, i) = 1;
    gens.push_back(g);
  }
  return gens;
}

} // namespace

static void BM_SmithNormalForm(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> d(-20, 20);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = d(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_GroupClosure(benchmark::State &state) {
  const auto gens = permutation_generators(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(close_group(gens.front().rows(), gens));
}
BENCHMARK(BM_GroupClosure)->Arg(3)->Arg(4)->Arg(5);

static void BM_HilbertBasisRankThree(benchmark::State &state) {
  const auto g = close_group(3, a3_generators());
  const auto rd = build_root_system(g, a3_base());
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_weight_monoid(rd));
}
BENCHMARK(BM_HilbertBasisRankThree);

static void BM_FundamentalInvariantsRankThree(benchmark::State &state) {
  const auto g = close_group(3, a3_generators());
  const auto rd = build_root_system(g, a3_base());
  const auto wm = compute_weight_monoid(rd);
  for (auto _ : state)
    benchmark::DoNotOptimize(fundamental_invariants(g, rd, wm));
}
BENCHMARK(BM_FundamentalInvariantsRankThree);

static void BM_VerdictSymmetricGroup(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = close_group(n, permutation_generators(n));
  for (auto _ : state)
    benchmark::DoNotOptimize(verdict(g));
}
BENCHMARK(BM_VerdictSymmetricGroup)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
