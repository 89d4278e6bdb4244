// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include <map>

#include "x1gon/cusps.hpp"
#include "x1gon/gonality.hpp"
#include "x1gon/lattice.hpp"

using namespace x1gon;

namespace {

// census enumeration: #Y_1(N)(F_{q^k}) on the plane model
// one untimed call first: model polynomials are memoized on first use
void BM_census_parallel(benchmark::State& st) {
  gonality::moduli_points((int)st.range(0), 2, 1);
  for (auto _ : st) benchmark::DoNotOptimize(gonality::moduli_points((int)st.range(0), 2, (int)st.range(1)));
}
void BM_census_serial(benchmark::State& st) {
  gonality::moduli_points((int)st.range(0), 2, 1);
  for (auto _ : st) benchmark::DoNotOptimize(gonality::moduli_points_serial((int)st.range(0), 2, (int)st.range(1)));
}
BENCHMARK(BM_census_parallel)->Args({29, 12})->Args({37, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_serial)->Args({29, 12})->Args({37, 12})->Unit(benchmark::kMillisecond);

const lattice::UnitLattice& lattice_for(int N) {
  static std::map<int, lattice::UnitLattice> m;
  auto it = m.find(N);
  if (it == m.end()) it = m.emplace(N, lattice::UnitLattice::from_table(cusps::divisor_table(N))).first;
  return it->second;
}

// search restarts
void BM_search_parallel(benchmark::State& st) {
  auto& L = lattice_for((int)st.range(0));
  lattice::SearchOptions o;
  o.budget = 64;
  for (auto _ : st) benchmark::DoNotOptimize(lattice::search_min_degree(L, o).degree);
}
void BM_search_serial(benchmark::State& st) {
  auto& L = lattice_for((int)st.range(0));
  lattice::SearchOptions o;
  o.budget = 64;
  for (auto _ : st) benchmark::DoNotOptimize(lattice::search_min_degree_serial(L, o).degree);
}
BENCHMARK(BM_search_parallel)->Arg(29)->Arg(37)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_serial)->Arg(29)->Arg(37)->Unit(benchmark::kMillisecond);

// per-k divisor table construction from cusp expansions
void BM_table_parallel(benchmark::State& st) {
  cusps::compute_divisor_table((int)st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cusps::compute_divisor_table((int)st.range(0)).rows.size());
}
void BM_table_serial(benchmark::State& st) {
  cusps::compute_divisor_table((int)st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cusps::compute_divisor_table_serial((int)st.range(0)).rows.size());
}
BENCHMARK(BM_table_parallel)->Arg(23)->Arg(29)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table_serial)->Arg(23)->Arg(29)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
