#include <benchmark/benchmark.h>

#include "resilat/congruence.hpp"
#include "resilat/enumeration.hpp"
#include "resilat/examples.hpp"

namespace {

using namespace resilat;

void BM_enumerate_lattices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattices(n).size());
}
BENCHMARK(BM_enumerate_lattices)->DenseRange(3, 6);

void BM_enumerate_groupoids_chain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::string> names(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    names[i] = "e" + std::to_string(i);
    if (i) pairs.emplace_back(i - 1, i);
  }
  FiniteLattice L = build_lattice_indexed(names, pairs);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rrl_groupoids(L).size());
}
BENCHMARK(BM_enumerate_groupoids_chain)->DenseRange(2, 4);

void BM_congruence_lattice(benchmark::State& state) {
  RRLGroupoid G = std::get<RRLGroupoid>(example("boolean-4"));
  AlgebraOps A = ops_of(G);
  for (auto _ : state) benchmark::DoNotOptimize(all_congruences(A).count());
}
BENCHMARK(BM_congruence_lattice);

void BM_classify(benchmark::State& state) {
  RRLGroupoid G = groupoid_from_sectioned(std::get<SectionedLattice>(example("mo2")));
  for (auto _ : state) benchmark::DoNotOptimize(classify(G).lukasiewicz_type);
}
BENCHMARK(BM_classify);

}  // namespace

BENCHMARK_MAIN();
