#include "fairchain/datagen.hpp"

#include <cmath>

#include "fairchain/error.hpp"
#include "fairchain/rng.hpp"

namespace fairchain {

ScoredDataset gen_gaussian(const GaussianSpec& spec) {
  const std::size_t k = spec.group_a.size();
  if (k == 0 || spec.group_b.size() != k) {
    throw InputError("per-group component parameter lists must be non-empty "
                     "and equally sized");
  }
  if (spec.n_per_group < 1) throw InputError("need n >= 1 per group");
  if (spec.anti_envelope_b && k < 2) {
    throw InputError("anti-correlation needs at least two components");
  }
  auto check_sd = [](const GaussianSpec::ComponentParams& p) {
    if (!(p.sd > 0.0)) throw InputError("component sd must be positive");
  };
  for (const auto& p : spec.group_a) check_sd(p);
  for (const auto& p : spec.group_b) check_sd(p);
  if (spec.anti_envelope_b) check_sd(*spec.anti_envelope_b);

  Rng rng(spec.seed);
  ScoredDataset::Builder builder(static_cast<int>(k));
  for (std::size_t i = 0; i < spec.n_per_group; ++i) {
    std::vector<double> scores(k);
    for (std::size_t c = 0; c < k; ++c) {
      scores[c] = rng.normal(spec.group_a[c].mean, spec.group_a[c].sd);
    }
    builder.add(spec.tag_a + std::to_string(i), spec.tag_a, std::nullopt,
                std::move(scores));
  }
  for (std::size_t i = 0; i < spec.n_per_group; ++i) {
    std::vector<double> scores(k);
    for (std::size_t c = 0; c < k; ++c) {
      const auto& p = spec.anti_envelope_b && c == 0 ? *spec.anti_envelope_b
                                                     : spec.group_b[c];
      scores[c] = rng.normal(p.mean, p.sd);
    }
    if (spec.anti_envelope_b) scores[0] -= scores[1];
    builder.add(spec.tag_b + std::to_string(i), spec.tag_b, std::nullopt,
                std::move(scores));
  }
  return builder.build();
}

ScoredDataset gen_synthetic_1(std::size_t n_per_group, std::uint64_t seed) {
  GaussianSpec spec;
  spec.group_a = {{10.0, 0.5}, {5.0, 0.5}};
  spec.group_b = {{9.0, 0.5}, {4.0, 0.1}};
  spec.n_per_group = n_per_group;
  spec.seed = seed;
  return gen_gaussian(spec);
}

ScoredDataset gen_synthetic_2(std::size_t n_per_group, std::uint64_t seed) {
  GaussianSpec spec;
  spec.group_a = {{10.0, 0.5}, {5.0, 0.5}};
  spec.group_b = {{9.0, 0.5}, {4.0, 0.1}};
  spec.anti_envelope_b = GaussianSpec::ComponentParams{13.0, 0.5};
  spec.n_per_group = n_per_group;
  spec.seed = seed;
  return gen_gaussian(spec);
}

ScoredDataset motivating_example() {
  ScoredDataset::Builder b(2);
  b.add("book1", "non-white", std::nullopt, {0.1, 0.4});
  b.add("book2", "non-white", std::nullopt, {0.4, 0.1});
  b.add("book3", "white", std::nullopt, {0.2, 0.3});
  b.add("book4", "white", std::nullopt, {0.3, 0.2});
  return b.build();
}

ScoredDataset epsilon_example(double a, double eps) {
  if (!(a > 0.0) || !(eps > 0.0)) {
    throw InputError("epsilon example needs a > 0 and eps > 0");
  }
  ScoredDataset::Builder b(2);
  b.add("a1", "a", std::nullopt, {a + eps, a + 4 * eps});
  b.add("a2", "a", std::nullopt, {a + 4 * eps, a + eps});
  b.add("b1", "b", std::nullopt, {a + 2 * eps, a + 3 * eps});
  b.add("b2", "b", std::nullopt, {a + 3 * eps, a + 2 * eps});
  return b.build();
}

ScoredDataset normalization_failure_example() {
  ScoredDataset::Builder b(2);
  b.add("a1", "a", std::nullopt, {0.0, 0.0});
  b.add("a2", "a", std::nullopt, {1.0, 1.0});
  b.add("b1", "b", std::nullopt, {1.0, 0.0});
  b.add("b2", "b", std::nullopt, {0.0, 1.0});
  return b.build();
}

ScoredDataset pairwise_counterexample() {
  ScoredDataset::Builder b(2);
  b.add("a_c1", "a", 1, {1.0, 4.0});
  b.add("a_c2", "a", 1, {4.0, 1.0});
  b.add("b_u1", "b", 0, {2.0, 3.0});
  b.add("b_u2", "b", 0, {3.0, 2.0});
  b.add("b_c1", "b", 1, {1.0, 1.0});
  b.add("b_c2", "b", 1, {4.0, 4.0});
  b.add("a_u1", "a", 0, {2.0, 3.0});
  b.add("a_u2", "a", 0, {3.0, 2.0});
  return b.build();
}

std::map<std::string, ScoredDataset> fixtures() {
  std::map<std::string, ScoredDataset> out;
  out.emplace("motivating", motivating_example());
  out.emplace("epsilon", epsilon_example(1.0, 0.1));
  out.emplace("norm-failure", normalization_failure_example());
  out.emplace("pairwise", pairwise_counterexample());
  return out;
}

}  // namespace fairchain
