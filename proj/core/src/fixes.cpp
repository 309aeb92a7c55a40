#include "fairchain/fixes.hpp"

#include <algorithm>
#include <cmath>

#include "fairchain/error.hpp"

namespace fairchain {

namespace {

std::vector<std::size_t> sorted_by_score(const std::vector<double>& col,
                                         std::vector<std::size_t> items) {
  std::stable_sort(items.begin(), items.end(),
                   [&](std::size_t a, std::size_t b) { return col[a] < col[b]; });
  return items;
}

// Writes reference quantiles onto the target items (already sorted by their
// current score). Equal sizes degenerate to one-to-one reassignment of the
// sorted reference scores; otherwise target j of m lands on the reference
// empirical quantile at j/(m+1), linearly interpolated on the (i-1)/(n-1)
// order-statistic grid and clamped at the ends.
void map_onto_reference(const std::vector<double>& ref_sorted,
                        const std::vector<std::size_t>& targets_sorted,
                        std::vector<double>& out) {
  const std::size_t n = ref_sorted.size();
  const std::size_t m = targets_sorted.size();
  if (m == n) {
    for (std::size_t j = 0; j < m; ++j) out[targets_sorted[j]] = ref_sorted[j];
    return;
  }
  for (std::size_t j = 1; j <= m; ++j) {
    const double h = n == 1 ? 0.0
                            : static_cast<double>(j * (n - 1)) /
                                  static_cast<double>(m + 1);
    double v;
    if (h <= 0.0) {
      v = ref_sorted.front();
    } else if (h >= static_cast<double>(n - 1)) {
      v = ref_sorted.back();
    } else {
      const std::size_t lo = static_cast<std::size_t>(h);
      const double frac = h - static_cast<double>(lo);
      v = frac == 0.0 ? ref_sorted[lo]
                      : ref_sorted[lo] +
                            frac * (ref_sorted[lo + 1] - ref_sorted[lo]);
    }
    out[targets_sorted[j - 1]] = v;
  }
}

std::vector<double> scores_at(const std::vector<double>& col,
                              const std::vector<std::size_t>& items) {
  std::vector<double> out;
  out.reserve(items.size());
  for (std::size_t i : items) out.push_back(col[i]);
  return out;
}

}  // namespace

int resolve_reference_group(const ScoredDataset& ds, const FixConfig& config) {
  if (config.reference_group) return ds.group_index(*config.reference_group);
  return canonical_groups(ds).first;
}

FixedComponent marginal_match(const ScoredDataset& ds, int k,
                              int reference_group) {
  if (reference_group != 0 && reference_group != 1) {
    throw InputError("reference group index must be 0 or 1");
  }
  const std::vector<double>& col = ds.component(k);
  FixedComponent fc;
  fc.component = k;
  fc.method = FixMethod::marginal_match;
  fc.scores = col;
  std::vector<double> ref_sorted = scores_at(col, ds.group_items(reference_group));
  std::sort(ref_sorted.begin(), ref_sorted.end());
  map_onto_reference(ref_sorted,
                     sorted_by_score(col, ds.group_items(1 - reference_group)),
                     fc.scores);
  return fc;
}

FixedComponent conditional_match(const ScoredDataset& ds, int k,
                                 int reference_group) {
  if (reference_group != 0 && reference_group != 1) {
    throw InputError("reference group index must be 0 or 1");
  }
  if (!ds.has_labels()) {
    throw InputError("conditional-match requires labels");
  }
  const std::vector<double>& col = ds.component(k);
  FixedComponent fc;
  fc.component = k;
  fc.method = FixMethod::conditional_match;
  fc.scores = col;
  for (int label = 0; label <= 1; ++label) {
    for (int g = 0; g <= 1; ++g) {
      if (ds.quadrant(g, label).empty()) {
        throw InputError("conditional-match needs every quadrant non-empty; " +
                         ds.quadrant_name(g, label) + " is empty");
      }
    }
    std::vector<double> ref_sorted =
        scores_at(col, ds.quadrant(reference_group, label));
    std::sort(ref_sorted.begin(), ref_sorted.end());
    map_onto_reference(
        ref_sorted, sorted_by_score(col, ds.quadrant(1 - reference_group, label)),
        fc.scores);
  }
  return fc;
}

FixedComponent delta_match(const ScoredDataset& ds, int k) {
  const std::vector<double>& col = ds.component(k);
  auto [ga, gb] = canonical_groups(ds);
  const auto a1 = ds.quadrant(ga, 1);
  const auto a0 = ds.quadrant(ga, 0);
  const auto b1 = ds.quadrant(gb, 1);
  const auto b0 = ds.quadrant(gb, 0);
  if (!(a1.size() == a0.size() && a0.size() == b1.size() &&
        b1.size() == b0.size()) ||
      a1.empty()) {
    throw FixModeError(
        "delta-match needs all four group/label quadrants non-empty and of "
        "equal size; use conditional-match otherwise");
  }
  FixedComponent fc;
  fc.component = k;
  fc.method = FixMethod::delta_match;
  fc.pair_level = true;
  fc.kept_deltas.deltas.reserve(a1.size() * b0.size());
  for (std::size_t i : a1) {
    for (std::size_t j : b0) fc.kept_deltas.deltas.push_back(col[i] - col[j]);
  }
  std::sort(fc.kept_deltas.deltas.begin(), fc.kept_deltas.deltas.end());
  // Every clicked-B/unclicked-A pair takes the same-rank kept delta, so the
  // fixed multiset is the kept multiset.
  fc.fixed_deltas = fc.kept_deltas;
  return fc;
}

FixedComponent normalize(const ScoredDataset& ds, int k) {
  const std::vector<double>& col = ds.component(k);
  FixedComponent fc;
  fc.component = k;
  fc.method = FixMethod::normalize;
  fc.scores = col;
  for (int g = 0; g <= 1; ++g) {
    const auto items = ds.group_items(g);
    double mean = 0.0;
    for (std::size_t i : items) mean += col[i];
    mean /= static_cast<double>(items.size());
    double var = 0.0;
    for (std::size_t i : items) var += (col[i] - mean) * (col[i] - mean);
    var /= static_cast<double>(items.size());
    const double sd = std::sqrt(var);
    if (sd == 0.0) {
      throw DegenerateDistributionError(
          "cannot normalize component " + std::to_string(k) + ": group " +
          ds.group_tags()[g] + " has constant scores");
    }
    for (std::size_t i : items) fc.scores[i] = (col[i] - mean) / sd;
  }
  return fc;
}

FixedComponent constant_p(const ScoredDataset& ds, int k, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InputError("constant-p value must lie in (0, 1)");
  }
  if (!ds.has_labels()) {
    throw InputError("constant-p requires labels");
  }
  ds.component(k);  // bounds check
  FixedComponent fc;
  fc.component = k;
  fc.method = FixMethod::constant_p;
  fc.scores.resize(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    fc.scores[i] = ds.label_of(i) == 1 ? p : 1.0 - p;
  }
  return fc;
}

FixedComponent apply_fix(const ScoredDataset& ds, int k, FixMethod method,
                         const FixConfig& config) {
  switch (method) {
    case FixMethod::none: {
      FixedComponent fc;
      fc.component = k;
      fc.method = FixMethod::none;
      fc.scores = ds.component(k);
      return fc;
    }
    case FixMethod::marginal_match:
      return marginal_match(ds, k, resolve_reference_group(ds, config));
    case FixMethod::conditional_match:
      return conditional_match(ds, k, resolve_reference_group(ds, config));
    case FixMethod::delta_match:
      return delta_match(ds, k);
    case FixMethod::normalize:
      return normalize(ds, k);
    case FixMethod::constant_p:
      return constant_p(ds, k, config.p);
  }
  throw std::logic_error("unreachable fix method");
}

std::vector<double> shifted_positive(std::vector<double> scores) {
  const double lo = *std::min_element(scores.begin(), scores.end());
  const double shift = 1.0 + std::fabs(lo);
  for (double& v : scores) v += shift;
  return scores;
}

namespace {

double delta_accuracy(const std::vector<double>& deltas, PairwiseOptions opts) {
  double correct = 0.0;
  for (double d : deltas) {
    if (d > 0.0) correct += 1.0;
    else if (d == 0.0 && opts.half_credit_ties) correct += 0.5;
  }
  return correct / static_cast<double>(deltas.size());
}

}  // namespace

PairwiseReport component_pairwise_report(const ScoredDataset& ds,
                                         const FixedComponent& fc,
                                         PairwiseOptions opts) {
  if (!fc.pair_level) return pairwise_gap(fc.scores, ds, opts);
  PairwiseReport rep;
  rep.acc_A_over_B = delta_accuracy(fc.kept_deltas.deltas, opts);
  rep.acc_B_over_A = delta_accuracy(fc.fixed_deltas.deltas, opts);
  rep.gap = std::fabs(rep.acc_A_over_B - rep.acc_B_over_A);
  rep.pair_counts = {fc.kept_deltas.deltas.size(),
                     fc.fixed_deltas.deltas.size()};
  return rep;
}

}  // namespace fairchain
