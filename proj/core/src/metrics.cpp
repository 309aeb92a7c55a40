#include "fairchain/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairchain/error.hpp"
#include "fairchain/rng.hpp"

namespace fairchain {

namespace {

void check_top_n(const ScoredDataset& ds, std::optional<std::size_t> top_n) {
  if (top_n && (*top_n < 1 || *top_n > ds.size())) {
    throw InputError("top_n must be in [1, " + std::to_string(ds.size()) +
                     "], got " + std::to_string(*top_n));
  }
}

void check_group(int group) {
  if (group != 0 && group != 1) {
    throw InputError("group index must be 0 or 1");
  }
}

}  // namespace

std::pair<int, int> canonical_groups(const ScoredDataset& ds) {
  const auto& tags = ds.group_tags();
  if (tags[0] <= tags[1]) return {0, 1};
  return {1, 0};
}

double exposure(const ScoredDataset& ds, const Ranking& r, int group,
                UtilityFn utility, std::optional<std::size_t> top_n) {
  check_group(group);
  check_top_n(ds, top_n);
  double sum = 0.0;
  for (std::size_t item : r.order) {
    if (top_n && !in_top_n(r, item, *top_n)) continue;
    if (ds.group_of(item) == group) sum += utility.at(r.effective_rank[item]);
  }
  return sum;
}

double exposure(const ScoredDataset& ds, const Ranking& r,
                const std::string& group_tag, UtilityFn utility,
                std::optional<std::size_t> top_n) {
  return exposure(ds, r, ds.group_index(group_tag), utility, top_n);
}

ExposureReport exposure_gap(const ScoredDataset& ds, const Ranking& r,
                            UtilityFn utility,
                            std::optional<std::size_t> top_n) {
  check_top_n(ds, top_n);
  auto [ga, gb] = canonical_groups(ds);
  double acc[2] = {0.0, 0.0};
  for (std::size_t item : r.order) {
    if (top_n && !in_top_n(r, item, *top_n)) continue;
    acc[ds.group_of(item)] += utility.at(r.effective_rank[item]);
  }
  ExposureReport rep;
  rep.group_tag_A = ds.group_tags()[ga];
  rep.group_tag_B = ds.group_tags()[gb];
  rep.exposure_A = acc[ga];
  rep.exposure_B = acc[gb];
  rep.utility = utility;
  rep.top_n = top_n;
  const double total = rep.exposure_A + rep.exposure_B;
  if (total == 0.0) {
    throw UndefinedGapError(
        "exposure gap undefined: neither group receives exposure" +
        std::string(top_n ? " in the top-" + std::to_string(*top_n) + " cut"
                          : ""));
  }
  rep.exposure_share_A = rep.exposure_A / total;
  rep.exposure_share_B = rep.exposure_B / total;
  rep.signed_gap = rep.exposure_share_A - rep.exposure_share_B;
  rep.abs_gap = std::fabs(rep.signed_gap);
  const double na = static_cast<double>(ds.group_size(ga));
  const double nb = static_cast<double>(ds.group_size(gb));
  rep.proportional_reference = std::fabs(na - nb) / (na + nb);
  return rep;
}

namespace {

std::vector<double> quadrant_scores(const std::vector<double>& scores,
                                    const ScoredDataset& ds, int group,
                                    int label) {
  std::vector<double> out;
  for (std::size_t i : ds.quadrant(group, label)) out.push_back(scores[i]);
  return out;
}

// Pair-counting accuracy between sorted score sets. Equivalent to the
// Mann-Whitney U statistic divided by the pair count, with ties scored
// per opts.
double sorted_accuracy(std::vector<double> clicked,
                       std::vector<double> unclicked, PairwiseOptions opts) {
  std::sort(clicked.begin(), clicked.end());
  std::sort(unclicked.begin(), unclicked.end());
  std::size_t lt = 0, le = 0;
  double correct = 0.0;
  for (double c : clicked) {
    while (lt < unclicked.size() && unclicked[lt] < c) ++lt;
    while (le < unclicked.size() && unclicked[le] <= c) ++le;
    correct += static_cast<double>(lt);
    if (opts.half_credit_ties) correct += 0.5 * static_cast<double>(le - lt);
  }
  return correct /
         (static_cast<double>(clicked.size()) *
          static_cast<double>(unclicked.size()));
}

}  // namespace

double pairwise_accuracy(const std::vector<double>& scores,
                         const ScoredDataset& ds, PairDirection direction,
                         PairwiseOptions opts) {
  if (scores.size() != ds.size()) {
    throw InputError("score vector length does not match dataset");
  }
  auto [ga, gb] = canonical_groups(ds);
  const int clicked_group = direction == PairDirection::A_over_B ? ga : gb;
  const int unclicked_group = direction == PairDirection::A_over_B ? gb : ga;
  auto clicked = quadrant_scores(scores, ds, clicked_group, 1);
  if (clicked.empty()) {
    throw UndefinedAccuracyError(ds.quadrant_name(clicked_group, 1));
  }
  auto unclicked = quadrant_scores(scores, ds, unclicked_group, 0);
  if (unclicked.empty()) {
    throw UndefinedAccuracyError(ds.quadrant_name(unclicked_group, 0));
  }
  return sorted_accuracy(std::move(clicked), std::move(unclicked), opts);
}

PairwiseReport pairwise_gap(const std::vector<double>& scores,
                            const ScoredDataset& ds, PairwiseOptions opts) {
  PairwiseReport rep;
  rep.acc_A_over_B =
      pairwise_accuracy(scores, ds, PairDirection::A_over_B, opts);
  rep.acc_B_over_A =
      pairwise_accuracy(scores, ds, PairDirection::B_over_A, opts);
  rep.gap = std::fabs(rep.acc_A_over_B - rep.acc_B_over_A);
  auto [ga, gb] = canonical_groups(ds);
  rep.pair_counts = {
      static_cast<std::uint64_t>(ds.quadrant(ga, 1).size()) *
          static_cast<std::uint64_t>(ds.quadrant(gb, 0).size()),
      static_cast<std::uint64_t>(ds.quadrant(gb, 1).size()) *
          static_cast<std::uint64_t>(ds.quadrant(ga, 0).size())};
  return rep;
}

namespace {

void check_positions(const ScoredDataset& ds,
                     const std::vector<std::size_t>& positions) {
  if (positions.empty()) throw InputError("empty position list");
  std::size_t prev = 0;
  for (std::size_t t : positions) {
    if (t < 1 || t > ds.size()) {
      throw InputError("curve position " + std::to_string(t) +
                       " outside [1, " + std::to_string(ds.size()) + "]");
    }
    if (t <= prev) throw InputError("curve positions must be strictly increasing");
    prev = t;
  }
}

// Prefix gaps along a fixed ranking. Items enter in ranking order as their
// effective rank clears each cut, so every point matches a standalone
// exposure_gap call bit for bit.
std::vector<double> prefix_gaps(const ScoredDataset& ds, const Ranking& r,
                                UtilityFn utility,
                                const std::vector<std::size_t>& positions) {
  auto [ga, gb] = canonical_groups(ds);
  (void)gb;
  std::vector<double> out;
  out.reserve(positions.size());
  double acc[2] = {0.0, 0.0};
  std::size_t next = 0;
  for (std::size_t t : positions) {
    while (next < r.order.size() &&
           r.effective_rank[r.order[next]] <= static_cast<double>(t)) {
      const std::size_t item = r.order[next];
      acc[ds.group_of(item)] += utility.at(r.effective_rank[item]);
      ++next;
    }
    const double total = acc[0] + acc[1];
    if (total == 0.0) {
      throw UndefinedGapError("exposure gap undefined at top-" +
                              std::to_string(t) + ": no exposure in the cut");
    }
    out.push_back(std::fabs(acc[ga] / total - acc[1 - ga] / total));
  }
  return out;
}

}  // namespace

GapCurve gap_curve(const ScoredDataset& ds, const std::vector<double>& scores,
                   UtilityFn utility, const std::vector<std::size_t>& positions,
                   TiePolicy ties, std::uint64_t seed) {
  if (scores.size() != ds.size()) {
    throw InputError("score vector length does not match dataset");
  }
  check_positions(ds, positions);
  const Ranking r = rank(scores, ties, seed);
  GapCurve curve;
  curve.positions = positions;
  curve.gaps = prefix_gaps(ds, r, utility, positions);
  return curve;
}

GapCurve random_order_reference(const ScoredDataset& ds, UtilityFn utility,
                                const std::vector<std::size_t>& positions,
                                std::size_t n_runs, std::uint64_t seed) {
  if (n_runs < 1) throw InputError("need at least one random run");
  check_positions(ds, positions);
  GapCurve curve;
  curve.positions = positions;
  curve.gaps.assign(positions.size(), 0.0);
  const std::size_t n = ds.size();
  for (std::size_t run = 0; run < n_runs; ++run) {
    Rng rng(derive_seed(seed, run));
    Ranking r;
    r.order.resize(n);
    std::iota(r.order.begin(), r.order.end(), std::size_t{0});
    rng.shuffle(r.order);
    r.effective_rank.assign(n, 0.0);
    for (std::size_t pos = 0; pos < n; ++pos) {
      r.effective_rank[r.order[pos]] = static_cast<double>(pos + 1);
    }
    const std::vector<double> gaps = prefix_gaps(ds, r, utility, positions);
    for (std::size_t i = 0; i < gaps.size(); ++i) curve.gaps[i] += gaps[i];
  }
  for (double& g : curve.gaps) g /= static_cast<double>(n_runs);
  return curve;
}

}  // namespace fairchain
