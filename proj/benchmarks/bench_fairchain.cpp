#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "fairchain/counterfactual.hpp"
#include "fairchain/datagen.hpp"
#include "fairchain/dataset.hpp"
#include "fairchain/fixes.hpp"
#include "fairchain/metrics.hpp"
#include "fairchain/ranking.hpp"
#include "fairchain/rng.hpp"

using namespace fairchain;

namespace {

ScoredDataset dataset(std::int64_t n_per_group) {
  return gen_synthetic_1(static_cast<std::size_t>(n_per_group), 42);
}

void BM_rank(benchmark::State& state) {
  const ScoredDataset ds = dataset(state.range(0));
  const auto composite = compose(ds).values;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(composite, TiePolicy::rank_share));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_rank)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_exposure_gap(benchmark::State& state) {
  const ScoredDataset ds = dataset(state.range(0));
  const auto composite = compose(ds).values;
  const Ranking r = rank(composite, TiePolicy::rank_share);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exposure_gap(ds, r, UtilityFn::power(0.65)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_exposure_gap)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oN);

void BM_pairwise_gap(benchmark::State& state) {
  // Labels come from the pairwise fixture layout: synthetic scores with a
  // seeded label per item.
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ScoredDataset base = dataset(state.range(0));
  ScoredDataset::Builder b(2);
  Rng rng(7);
  for (std::size_t i = 0; i < base.size(); ++i) {
    b.add(base.id_of(i), base.group_tags()[base.group_of(i)],
          static_cast<int>(rng.bounded(2)),
          {base.score(i, 0), base.score(i, 1)});
  }
  const ScoredDataset ds = b.build();
  const auto composite = compose(ds).values;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_gap(composite, ds));
  }
  benchmark::DoNotOptimize(n);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_pairwise_gap)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_marginal_match(benchmark::State& state) {
  const ScoredDataset ds = dataset(state.range(0));
  FixConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_fix(ds, 0, FixMethod::marginal_match, cfg));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_marginal_match)
    ->Range(1 << 8, 1 << 16)
    ->Complexity(benchmark::oNLogN);

void BM_headroom_sweep(benchmark::State& state) {
  const ScoredDataset ds = dataset(state.range(0));
  CounterfactualSpec spec;
  spec.fix.methods.assign(static_cast<std::size_t>(ds.components()),
                          FixMethod::marginal_match);
  for (auto _ : state) {
    benchmark::DoNotOptimize(headroom_sweep(ds, spec, SubsetMode::all_subsets));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_headroom_sweep)
    ->Range(1 << 8, 1 << 14)
    ->Complexity(benchmark::oNLogN);

}  // namespace

BENCHMARK_MAIN();
