#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "synthlm/common.hpp"

namespace synthlm {

/// SplitMix64 step; used to mix seeds, never as a long-running stream.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic random stream. The engine is std::mt19937_64, whose
/// output sequence is pinned by the standard; every derived draw below is
/// implemented here rather than with std::*_distribution, which are not
/// portable across standard libraries. Same seed, same draws, everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased draw from [0, n) by rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw Error("Rng::uniform_int: n must be > 0");
    if ((n & (n - 1)) == 0) return next_u64() & (n - 1);  // power of two
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform_real() < p; }

  /// Box-Muller with cached spare.
  double normal(double mean = 0.0, double stddev = 1.0) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + spare_ * stddev;
    }
    // u1 in (0, 1] so log() stays finite.
    const double u1 = 1.0 - uniform_real();
    const double u2 = uniform_real();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return mean + r * std::cos(theta) * stddev;
  }

  /// Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Per-stream generator state as a pure function of (master_seed,
/// stream_index). Distinct indices give independent streams, which is what
/// makes parallel generation order-insensitive.
inline Rng derive_rng(std::uint64_t master_seed, std::uint64_t stream_index) {
  std::uint64_t s = master_seed;
  const std::uint64_t mixed_master = splitmix64(s);
  s = mixed_master ^ (stream_index * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL);
  return Rng(splitmix64(s));
}

}  // namespace synthlm
