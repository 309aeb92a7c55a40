#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fairchain {

// How tied scores occupy ranking slots.
//   rank_share:    every item of a tied block gets the block's mean rank, so
//                  reruns are reproducible without a seed and no group is
//                  favored by sort order.
//   seeded_random: tied blocks are shuffled with the run seed.
enum class TiePolicy { rank_share, seeded_random };

// Positional discount of attention at 1-based rank r.
//   power:        r^-w          (w >= 0; w = 0 weighs every position equally)
//   log_discount: 1 / log(1+r)
struct UtilityFn {
  enum class Kind { power, log_discount };
  Kind kind = Kind::power;
  double w = 0.65;

  static UtilityFn power(double w = 0.65);
  static UtilityFn log_discount();

  double at(double rank) const;
};

struct Ranking {
  // Item indices from best score to worst. Under rank_share, tied items keep
  // input order here; their shared effective rank is what downstream code
  // consumes. Under seeded_random, tied runs are shuffled.
  std::vector<std::size_t> order;
  // effective_rank[item] is 1-based; fractional only for rank_share ties.
  std::vector<double> effective_rank;
  bool has_ties = false;
};

// Ranks items by descending score. Non-finite scores -> InputError.
// `seed` is consumed only by seeded_random.
Ranking rank(const std::vector<double>& scores, TiePolicy policy,
             std::uint64_t seed = 0);

// Whether an item makes a top-n cut: effective_rank <= top_n. With
// rank_share a block straddling the boundary is admitted iff its mean
// rank fits, so group exposure within the block stays symmetric.
bool in_top_n(const Ranking& r, std::size_t item, std::size_t top_n);

}  // namespace fairchain
