#include "jetcoh/affine.hpp"
#include "jetcoh/cochain.hpp"
#include "jetcoh/exact_matrix.hpp"
#include "jetcoh/fock.hpp"
#include "jetcoh/reptheory.hpp"

#include <benchmark/benchmark.h>

using namespace jetcoh;

namespace {

const liealg::AlgebraData& algebra(const std::string& name) {
  static std::map<std::string, liealg::AlgebraData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, liealg::build_algebra(liealg::AlgebraSpec::parse(name))).first;
  return it->second;
}

void BM_BuildAlgebra(benchmark::State& state) {
  const char* names[] = {"A2", "B3", "G2", "E6"};
  const auto spec = liealg::AlgebraSpec::parse(names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(liealg::build_algebra(spec));
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_BuildAlgebra)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CellA1(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const auto cell = cochain::build_cell(algebra("A1"), p, k);
    benchmark::DoNotOptimize(cochain::harmonic_space(algebra("A1"), cell));
  }
}
BENCHMARK(BM_CellA1)->Args({2, 3})->Args({3, 6})->Args({3, 8})->Unit(benchmark::kMillisecond);

void BM_CellA2(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const auto cell = cochain::build_cell(algebra("A2"), p, k);
    benchmark::DoNotOptimize(cochain::harmonic_space(algebra("A2"), cell));
  }
}
BENCHMARK(BM_CellA2)->Args({2, 3})->Args({2, 4})->Args({3, 5})->Unit(benchmark::kMillisecond);

void BM_FractionFreeRank(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(n, n);
  std::uint64_t seed = 42;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      m(i, j) = frac(static_cast<long>(seed >> 60) - 8, 1 + static_cast<long>((seed >> 40) % 5));
    }
  for (auto _ : state) benchmark::DoNotOptimize(jetcoh::rank(m));
}
BENCHMARK(BM_FractionFreeRank)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

void BM_MinimalCosetReps(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(affine::minimal_coset_reps(algebra("A2"), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MinimalCosetReps)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_Decompose(benchmark::State& state) {
  const auto& g = algebra("A2");
  const reptheory::CharacterTable table(g);
  const auto w = reptheory::weights_of_basis(g, cochain::build_basis(g, 3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(reptheory::decompose(table, w));
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMicrosecond);

void BM_FockD(benchmark::State& state) {
  const fock::FockModel model(algebra("A1"));
  const auto basis = fock::enumerate_monomials(model.dim(), -1, 2);
  for (auto _ : state)
    for (std::size_t i = 0; i < basis.size(); i += 64) benchmark::DoNotOptimize(model.d(fock::FockVector(basis[i])));
  state.SetItemsProcessed(state.iterations() * static_cast<long>((basis.size() + 63) / 64));
}
BENCHMARK(BM_FockD)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
