#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairchain/dataset.hpp"
#include "fairchain/ranking.hpp"

namespace fairchain {

// Group indices (into ScoredDataset::group_tags) ordered so that .first is
// the lexicographically smaller tag. Reports call that group A; the sign of
// every signed gap follows this convention regardless of file row order.
std::pair<int, int> canonical_groups(const ScoredDataset& ds);

struct ExposureReport {
  std::string group_tag_A, group_tag_B;
  double exposure_A = 0.0, exposure_B = 0.0;
  double exposure_share_A = 0.0, exposure_share_B = 0.0;
  double signed_gap = 0.0;  // share_A − share_B
  double abs_gap = 0.0;
  // Gap a size-proportional exposure split would score: |nA − nB|/(nA + nB).
  // Context for unequal groups, zero when sizes match; not a second metric.
  double proportional_reference = 0.0;
  UtilityFn utility;
  std::optional<std::size_t> top_n;
};

// Sum of positional utility collected by one group inside the top-n cut
// (whole ranking when top_n is absent). Accumulates in ranking order.
double exposure(const ScoredDataset& ds, const Ranking& r, int group,
                UtilityFn utility, std::optional<std::size_t> top_n = {});
double exposure(const ScoredDataset& ds, const Ranking& r,
                const std::string& group_tag, UtilityFn utility,
                std::optional<std::size_t> top_n = {});

// Normalized exposure gap between the two groups. Both exposures zero
// (possible when a tied block straddles a small top-n cut) -> UndefinedGapError.
ExposureReport exposure_gap(const ScoredDataset& ds, const Ranking& r,
                            UtilityFn utility,
                            std::optional<std::size_t> top_n = {});

enum class PairDirection { A_over_B, B_over_A };

struct PairwiseOptions {
  // Score ties between a clicked and an unclicked item count as incorrect by
  // default; half_credit_ties scores them 0.5 instead.
  bool half_credit_ties = false;
};

struct PairwiseReport {
  double acc_A_over_B = 0.0;
  double acc_B_over_A = 0.0;
  double gap = 0.0;
  // (|A1|·|B0|, |B1|·|A0|)
  std::pair<std::uint64_t, std::uint64_t> pair_counts{0, 0};
};

// P(score of clicked > score of unclicked) over cross-group pairs for one
// direction: A_over_B pairs clicked-A items against unclicked-B items.
// Runs in O(n log n) via sorted two-pointer counting. Empty quadrant ->
// UndefinedAccuracyError naming it.
double pairwise_accuracy(const std::vector<double>& scores,
                         const ScoredDataset& ds, PairDirection direction,
                         PairwiseOptions opts = {});

PairwiseReport pairwise_gap(const std::vector<double>& scores,
                            const ScoredDataset& ds, PairwiseOptions opts = {});

struct GapCurve {
  std::vector<std::size_t> positions;  // strictly increasing
  std::vector<double> gaps;            // abs_gap at each top-t cut
  std::vector<double> reference;       // random-order mean gaps; empty if none
};

// Exposure gap of the top-t prefix for each t in positions. One ranking is
// built and reused, so each point is bit-identical to exposure_gap at that
// top_n.
GapCurve gap_curve(const ScoredDataset& ds, const std::vector<double>& scores,
                   UtilityFn utility, const std::vector<std::size_t>& positions,
                   TiePolicy ties = TiePolicy::rank_share,
                   std::uint64_t seed = 0);

// Mean abs_gap per position over n_runs uniformly random orderings. Each run
// permutes with its own seed derived from `seed`, so a parallel evaluation
// would reproduce the sequential result bit for bit.
GapCurve random_order_reference(const ScoredDataset& ds, UtilityFn utility,
                                const std::vector<std::size_t>& positions,
                                std::size_t n_runs, std::uint64_t seed);

}  // namespace fairchain
