// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "octaboson/hallittlewood.hpp"
#include "octaboson/kernels.hpp"

using namespace octaboson;
using namespace octaboson::kernels;

namespace {

const WeightParams kWeights{0.5, {1.0 / 3, -0.25, 0.2, -1.0 / 6}};

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

std::vector<OrbitTerm> orbit_terms(std::size_t n) {
  std::vector<OrbitTerm> terms;
  for (const auto& w : hyperoctahedral_group(n)) terms.push_back({&w, 1, Exponent{}});
  return terms;
}

void BM_OrbitSum(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const auto c = c_factor(Partition::zero(n), ParamSet::defaults());
  LaurentPoly p = c.numerator;
  for (std::size_t j = 0; j < n; ++j) p *= LaurentPoly::one_minus(n, make_exponent(std::vector<int>(n, 1)), Rational(1, 3));
  const auto terms = orbit_terms(n);
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_sum(p, terms, exec));
  state.counters["terms"] = static_cast<double>(p.term_count());
}

void BM_DeltaGrid(benchmark::State& state) {
  const TorusGrid grid{static_cast<std::size_t>(state.range(1)), 32};
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(delta_abs2_on_grid(grid, kWeights, exec));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * grid.node_count()));
}

void BM_ValuesOnGrid(benchmark::State& state) {
  const TorusGrid grid{static_cast<std::size_t>(state.range(1)), 32};
  const auto p = monomial_symmetric(Partition(std::vector<int>(grid.n, 2)));
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(values_on_grid(p, grid, exec));
}

void BM_WeightedMean(benchmark::State& state) {
  const TorusGrid grid{static_cast<std::size_t>(state.range(1)), 32};
  const auto w = delta_abs2_on_grid(grid, kWeights, Exec::serial);
  const auto f = values_on_grid(monomial_symmetric(Partition(std::vector<int>(grid.n, 1))), grid, Exec::serial);
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_mean(f, f, w, exec));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * grid.node_count()));
}

// First argument: 0 serial, 1 parallel.  Second: dimension n.
BENCHMARK(BM_OrbitSum)->ArgsProduct({{0, 1}, {2, 3, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaGrid)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValuesOnGrid)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedMean)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
