#include "fairchain/counterfactual.hpp"

#include <algorithm>
#include <map>

#include "fairchain/error.hpp"
#include "fairchain/fixes.hpp"

namespace fairchain {

namespace {

FixMethod method_for(const CounterfactualSpec& spec, int k) {
  const auto& m = spec.fix.methods;
  if (k < 0 || static_cast<std::size_t>(k) >= m.size()) {
    throw InputError("fix config has no entry for component " +
                     std::to_string(k));
  }
  return m[static_cast<std::size_t>(k)];
}

}  // namespace

CompositeScore improved_system(const ScoredDataset& ds,
                               const std::vector<int>& subset,
                               const CounterfactualSpec& spec) {
  std::map<int, std::vector<double>> overrides;
  for (int k : subset) {
    const FixMethod method = method_for(spec, k);
    if (method == FixMethod::delta_match) {
      throw FixModeError(
          "delta-match is pair-level and cannot enter a composition; use "
          "conditional-match for component " +
          std::to_string(k));
    }
    if (method == FixMethod::none) continue;
    overrides[k] = apply_fix(ds, k, method, spec.fix).scores;
  }
  if (!spec.fix.positivity_shift) return compose(ds, overrides);
  std::map<int, std::vector<double>> shifted;
  for (int k = 0; k < ds.components(); ++k) {
    auto it = overrides.find(k);
    shifted[k] = shifted_positive(it == overrides.end() ? ds.component(k)
                                                        : it->second);
  }
  return compose(ds, shifted);
}

double system_gap(const ScoredDataset& ds, const CompositeScore& composite,
                  const CounterfactualSpec& spec) {
  if (spec.metric == TargetMetric::pairwise) {
    return pairwise_gap(composite.values, ds, spec.pairwise).gap;
  }
  const Ranking r = rank(composite.values, spec.ties, spec.seed);
  return exposure_gap(ds, r, spec.utility, spec.top_n).abs_gap;
}

double fairness_improvement(const ScoredDataset& ds,
                            const std::vector<int>& subset,
                            const CounterfactualSpec& spec) {
  const double baseline = system_gap(ds, improved_system(ds, {}, spec), spec);
  return baseline - system_gap(ds, improved_system(ds, subset, spec), spec);
}

double fairness_improvement(const ScoredDataset& ds, int component,
                            const CounterfactualSpec& spec) {
  return fairness_improvement(ds, std::vector<int>{component}, spec);
}

namespace {

std::vector<std::vector<int>> enumerate_subsets(int k, SubsetMode mode) {
  std::vector<std::vector<int>> out;
  if (mode == SubsetMode::singletons) {
    for (int i = 0; i < k; ++i) out.push_back({i});
    return out;
  }
  if (k > 16) {
    throw InputError("all-subsets sweep limited to 16 components");
  }
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

HeadroomTable headroom_sweep(const ScoredDataset& ds,
                             const CounterfactualSpec& spec, SubsetMode mode) {
  return headroom_sweep(ds, spec, enumerate_subsets(ds.components(), mode));
}

HeadroomTable headroom_sweep(const ScoredDataset& ds,
                             const CounterfactualSpec& spec,
                             const std::vector<std::vector<int>>& subsets) {
  HeadroomTable table;
  table.baseline_gap = system_gap(ds, improved_system(ds, {}, spec), spec);
  for (const auto& subset : subsets) {
    for (int k : subset) method_for(spec, k);  // validate indices early
    HeadroomRow row;
    row.subset = subset;
    std::sort(row.subset.begin(), row.subset.end());
    row.baseline_gap = table.baseline_gap;
    row.improved_gap = system_gap(ds, improved_system(ds, row.subset, spec), spec);
    row.fi = row.baseline_gap - row.improved_gap;
    table.rows.push_back(std::move(row));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const HeadroomRow& a, const HeadroomRow& b) {
                     if (a.fi != b.fi) return a.fi > b.fi;
                     if (a.subset.size() != b.subset.size()) {
                       return a.subset.size() < b.subset.size();
                     }
                     return a.subset < b.subset;
                   });
  return table;
}

}  // namespace fairchain
