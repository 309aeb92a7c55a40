#pragma once

#include <vector>

#include "fairchain/dataset.hpp"
#include "fairchain/fix_config.hpp"
#include "fairchain/metrics.hpp"

namespace fairchain {

// Sorted multiset of cross-group score differences, clicked minus unclicked,
// for one pair direction.
struct DeltaSet {
  std::vector<double> deltas;  // ascending
};

// Result of fixing one component. Per-item methods fill `scores` (same item
// order as the dataset). delta_match is pair-level: it fills the two delta
// sets instead and leaves `scores` empty, because no single per-item score
// function realizes the per-pair assignment.
struct FixedComponent {
  int component = 0;
  FixMethod method = FixMethod::none;
  std::vector<double> scores;
  DeltaSet kept_deltas;   // clicked-A vs unclicked-B, untouched direction
  DeltaSet fixed_deltas;  // clicked-B vs unclicked-A after reassignment
  bool pair_level = false;
};

// Remaps the non-reference group's component-k scores onto the reference
// group's empirical distribution. Equal group sizes reassign sorted scores
// one to one; otherwise each target lands on the reference quantile at
// j/(m+1), linearly interpolated between order statistics and clamped at the
// extremes. Reference group scores pass through bit-identical.
FixedComponent marginal_match(const ScoredDataset& ds, int k,
                              int reference_group);

// marginal_match applied separately inside the label-0 and label-1 strata.
// Requires labels and all four quadrants non-empty.
FixedComponent conditional_match(const ScoredDataset& ds, int k,
                                 int reference_group);

// Pair-level delta matching: keeps the clicked-A/unclicked-B delta multiset
// and reassigns every clicked-B/unclicked-A pair the same-rank element of
// the kept sorted multiset. Requires labels and equal quadrant sizes; on
// unequal sizes throws FixModeError pointing at conditional_match.
FixedComponent delta_match(const ScoredDataset& ds, int k);

// Per-group standardization to mean 0 and population (divide-by-n) standard
// deviation 1. A constant-valued group -> DegenerateDistributionError.
FixedComponent normalize(const ScoredDataset& ds, int k);

// Clicked items get score p, unclicked items 1-p, both groups. Requires
// labels and p in (0, 1).
FixedComponent constant_p(const ScoredDataset& ds, int k, double p);

// Dispatch by method; FixMethod::none returns the column unchanged.
FixedComponent apply_fix(const ScoredDataset& ds, int k, FixMethod method,
                         const FixConfig& config);

// Adds 1 + |min| to every value, making the column strictly positive while
// preserving order.
std::vector<double> shifted_positive(std::vector<double> scores);

// Pairwise report of a single fixed component: per-item fixes are evaluated
// on their score column; delta_match directly on its delta signs, which is
// what makes its zero gap exact.
PairwiseReport component_pairwise_report(const ScoredDataset& ds,
                                         const FixedComponent& fc,
                                         PairwiseOptions opts = {});

// Resolves FixConfig::reference_group to a group index (lexicographically
// first tag when unset).
int resolve_reference_group(const ScoredDataset& ds, const FixConfig& config);

}  // namespace fairchain
