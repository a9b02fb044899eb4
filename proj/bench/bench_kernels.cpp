// Serial reference path against the OpenMP path for each data-parallel kernel.
// Arg 0 selects serial, 1 parallel; results are bit-identical, only wall time differs.

#include <benchmark/benchmark.h>

#include "bidisc/inversion.hpp"
#include "bidisc/oracle.hpp"
#include "bidisc/sampling.hpp"
#include "bidisc/sweep.hpp"

using namespace bidisc;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

std::vector<PolePair> omega2_targets(int n) {
  Rng rng(derive_seed(kDefaultSeed, 901));
  std::vector<PolePair> out;
  for (int k = 0; k < n; ++k) out.push_back(big_phi(random_params_in(rng, k % 2 ? Region::E2 : Region::E1)));
  return out;
}

PolePair generic_pair() {
  Rng rng(derive_seed(kDefaultSeed, 902));
  return random_generic_pair(rng);
}

void BM_Inversion(benchmark::State& state) {
  const auto targets = omega2_targets(16);
  InversionConfig cfg;
  for (auto _ : state)
    for (const auto& t : targets) benchmark::DoNotOptimize(invert_big_phi(t, kDefaultSeed, cfg, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(targets.size()));
}

void BM_FamilyCScan(benchmark::State& state) {
  const PolePair pr = generic_pair();
  const OracleBudget budget;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_detail::family_c_scan(pr, budget, exec_of(state)));
}

void BM_FamilyBStarts(benchmark::State& state) {
  const PolePair pr = generic_pair();
  const OracleBudget budget;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_detail::family_b_starts(pr, budget, exec_of(state)));
}

void BM_Sweep(benchmark::State& state) {
  SweepSpec spec;
  spec.fixed = {0.1, 0.0, 0.5, 0.0, 0.5, 0.0, 0.1, 0.0};
  spec.x = {0, 0.05, 0.2, 8};
  spec.y = {5, -0.1, 0.1, 8};
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * 64);
}

}  // namespace

BENCHMARK(BM_Inversion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FamilyCScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FamilyBStarts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
