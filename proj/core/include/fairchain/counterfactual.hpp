#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fairchain/dataset.hpp"
#include "fairchain/fix_config.hpp"
#include "fairchain/metrics.hpp"

namespace fairchain {

enum class TargetMetric { exposure, pairwise };

// Everything a what-if run needs: which gap to target, how to rank, and
// which fix each component would get.
struct CounterfactualSpec {
  TargetMetric metric = TargetMetric::exposure;
  UtilityFn utility = UtilityFn::power();
  std::optional<std::size_t> top_n;
  TiePolicy ties = TiePolicy::rank_share;
  std::uint64_t seed = 0;
  FixConfig fix;
  PairwiseOptions pairwise;
};

// Composite with the subset's components replaced by their fixed versions
// (substituted before multiplication) and all others untouched. Only
// per-item fixes compose; delta-match in the subset -> FixModeError.
CompositeScore improved_system(const ScoredDataset& ds,
                               const std::vector<int>& subset,
                               const CounterfactualSpec& spec);

// Absolute gap of the configured target metric on the given composite.
double system_gap(const ScoredDataset& ds, const CompositeScore& composite,
                  const CounterfactualSpec& spec);

// Baseline gap minus the gap after fixing `subset`; positive means the fix
// helps. (Reported gaps shrink when fairness improves, so the difference is
// taken baseline-first to make "largest improvement" the largest value.)
double fairness_improvement(const ScoredDataset& ds,
                            const std::vector<int>& subset,
                            const CounterfactualSpec& spec);
double fairness_improvement(const ScoredDataset& ds, int component,
                            const CounterfactualSpec& spec);

struct HeadroomRow {
  std::vector<int> subset;  // ascending component indices
  double baseline_gap = 0.0;
  double improved_gap = 0.0;
  double fi = 0.0;  // baseline_gap - improved_gap
};

struct HeadroomTable {
  double baseline_gap = 0.0;
  std::vector<HeadroomRow> rows;  // FI descending; ties: size, then indices
};

enum class SubsetMode { singletons, all_subsets };

// One what-if row per subset, sharing a single baseline gap. all_subsets
// enumerates every non-empty subset and is limited to K <= 16.
HeadroomTable headroom_sweep(const ScoredDataset& ds,
                             const CounterfactualSpec& spec, SubsetMode mode);
HeadroomTable headroom_sweep(const ScoredDataset& ds,
                             const CounterfactualSpec& spec,
                             const std::vector<std::vector<int>>& subsets);

}  // namespace fairchain
