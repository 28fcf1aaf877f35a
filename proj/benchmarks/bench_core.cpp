#include <benchmark/benchmark.h>

#include <random>

#include "knotrep/counting.hpp"
#include "knotrep/fixtures.hpp"
#include "knotrep/metabelian_rep.hpp"
#include "knotrep/smith.hpp"

using namespace knotrep;

namespace {

AlexanderModulePresentation module_of(const std::string& name) {
  return alexander_module(braid_to_wirtinger(fixture(name).braid));
}

void BM_SmithRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> entry(-50, 50);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandom)->Arg(8)->Arg(16)->Arg(32);

void BM_HomologyLn(benchmark::State& state) {
  const auto a = module_of("6_1");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology_Ln(a, n));
}
BENCHMARK(BM_HomologyLn)->DenseRange(2, 8, 2);

void BM_CountDirect(benchmark::State& state) {
  const auto a = module_of("6_1");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DivisorTower tower(a);
    benchmark::DoNotOptimize(count_direct(n, tower));
  }
}
BENCHMARK(BM_CountDirect)->DenseRange(2, 5);

void BM_BuildAndVerifyReps(benchmark::State& state) {
  const auto w = braid_to_wirtinger(fixture("figure-eight").braid);
  const auto c = homology_Ln(alexander_module(w), static_cast<int>(state.range(0)));
  const CharacterGroup g(c);
  std::vector<Character> chars;
  for (const auto& chi : enumerate_characters(c))
    if (g.order(chi) == c.n) chars.push_back(chi);
  for (auto _ : state)
    for (const auto& chi : chars) benchmark::DoNotOptimize(verify_rep(build_sl_rep(w, c, chi), w));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(chars.size()));
}
BENCHMARK(BM_BuildAndVerifyReps)->DenseRange(2, 5);

}  // namespace
BENCHMARK_MAIN();
