#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairchain/dataset.hpp"

namespace fairchain {

// Two-group Gaussian score generator. Per item, one draw per component in
// component order, group a's items first; with an anti-correlation envelope,
// group b's component 0 becomes envelope_draw - component_1_draw. The draw
// discipline is part of the contract: a seed pins the dataset bit for bit.
struct GaussianSpec {
  struct ComponentParams {
    double mean = 0.0;
    double sd = 1.0;
  };
  std::vector<ComponentParams> group_a;  // one entry per component
  std::vector<ComponentParams> group_b;
  // When set (needs K >= 2), group b's component 0 = draw(N(mean, sd)) minus
  // its component-1 draw.
  std::optional<ComponentParams> anti_envelope_b;
  std::size_t n_per_group = 1000;
  std::uint64_t seed = 0;
  std::string tag_a = "a";
  std::string tag_b = "b";
};

ScoredDataset gen_gaussian(const GaussianSpec& spec);

// Two independent Gaussian components per group:
//   a: f0 ~ N(10, 0.5), f1 ~ N(5, 0.5)
//   b: f0 ~ N(9, 0.5),  f1 ~ N(4, 0.1)
// Both components favor group a on their own; so does the composition.
ScoredDataset gen_synthetic_1(std::size_t n_per_group, std::uint64_t seed);

// Like gen_synthetic_1, but group b's components anti-correlate:
// f0 = N(13, 0.5) - f1, keeping mean(f0) = 9.
ScoredDataset gen_synthetic_2(std::size_t n_per_group, std::uint64_t seed);

// Four books, two per group, scored by a 2-component system. Each component
// ranks the groups evenly; the composite puts both white books on top.
ScoredDataset motivating_example();

// Two items per group with component scores built from a and eps. Every
// component's top-2 splits across groups while the composed top-2 is all
// group b, for any a > 0, eps > 0.
ScoredDataset epsilon_example(double a, double eps);

// Per-group normalization backfire: after normalizing both components the
// composites become +1 for group a and -1 for group b. A positivity shift
// repairs it.
ScoredDataset normalization_failure_example();

// Labeled 8-item system where each component's pairwise gap is 0 but the
// composition scores 0.0 against 0.5 by direction.
ScoredDataset pairwise_counterexample();

// The named fixture set above, with epsilon_example at a=1, eps=0.1. Keys:
// motivating, epsilon, norm-failure, pairwise.
std::map<std::string, ScoredDataset> fixtures();

}  // namespace fairchain
