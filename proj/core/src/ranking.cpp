#include "fairchain/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairchain/error.hpp"
#include "fairchain/rng.hpp"

namespace fairchain {

UtilityFn UtilityFn::power(double w) {
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw InputError("utility exponent must be non-negative and finite");
  }
  return UtilityFn{Kind::power, w};
}

UtilityFn UtilityFn::log_discount() { return UtilityFn{Kind::log_discount, 0.0}; }

double UtilityFn::at(double rank) const {
  switch (kind) {
    case Kind::power:
      return std::pow(rank, -w);
    case Kind::log_discount:
      return 1.0 / std::log(1.0 + rank);
  }
  throw std::logic_error("unreachable utility kind");
}

Ranking rank(const std::vector<double>& scores, TiePolicy policy,
             std::uint64_t seed) {
  for (double s : scores) {
    if (!std::isfinite(s)) throw InputError("cannot rank a non-finite score");
  }
  const std::size_t n = scores.size();
  Ranking r;
  r.order.resize(n);
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });

  r.effective_rank.assign(n, 0.0);
  Rng rng(seed);
  std::size_t pos = 0;
  while (pos < n) {
    std::size_t end = pos + 1;
    while (end < n && scores[r.order[end]] == scores[r.order[pos]]) ++end;
    const std::size_t block = end - pos;
    if (block > 1) {
      r.has_ties = true;
      if (policy == TiePolicy::seeded_random) {
        std::vector<std::size_t> slice(r.order.begin() + pos,
                                       r.order.begin() + end);
        rng.shuffle(slice);
        std::copy(slice.begin(), slice.end(), r.order.begin() + pos);
      }
    }
    for (std::size_t i = pos; i < end; ++i) {
      if (policy == TiePolicy::rank_share) {
        // mean of the 1-based slots pos+1 .. end
        r.effective_rank[r.order[i]] =
            (static_cast<double>(pos + 1) + static_cast<double>(end)) / 2.0;
      } else {
        r.effective_rank[r.order[i]] = static_cast<double>(i + 1);
      }
    }
    pos = end;
  }
  return r;
}

bool in_top_n(const Ranking& r, std::size_t item, std::size_t top_n) {
  return r.effective_rank[item] <= static_cast<double>(top_n);
}

}  // namespace fairchain
