#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fairchain {

// Inverse of the standard normal CDF (Wichura's AS241, double precision).
// Domain (0, 1), relative error below 1e-15.
double inverse_normal_cdf(double p);

// Independent per-stream seed derived from a master seed (splitmix64 mix).
// Lets loops hand each iteration its own Rng so parallel evaluation stays
// bit-identical to sequential.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// Deterministic random stream. Everything is pinned so that a given seed
// produces bit-identical output on every platform: the generator is
// std::mt19937_64 (fully specified by the standard) and all conversions
// (uniform doubles, bounded integers, Gaussians, shuffles) are implemented
// here instead of relying on unspecified <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on (0, 1), strictly open on both ends (53-bit resolution).
  double uniform01() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * kInv53;
  }

  // Uniform integer in [0, n) via masked rejection; n must be >= 1.
  std::uint64_t bounded(std::uint64_t n);

  // Gaussian draw by inverse-CDF of a single uniform01().
  double normal(double mean, double stddev) {
    return mean + stddev * inverse_normal_cdf(uniform01());
  }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  std::mt19937_64 gen_;
};

}  // namespace fairchain
