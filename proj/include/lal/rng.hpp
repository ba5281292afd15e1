#pragma once

#include <cstdint>

namespace lal {

// splitmix64. Every helper below consumes exactly one output per call, so the
// randomness of a run is pinned by (seed, number of fills) and traces replay
// bit-identically.
class rng64 {
 public:
  explicit rng64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /** Uniform draw from [0, n); n >= 1. One output. */
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
  }

  /** Bernoulli(p). One output. */
  bool coin(double p) {
    std::uint64_t r = next();
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return r < static_cast<std::uint64_t>(p * 18446744073709551616.0);
  }

  /** Uniform double in [0, 1). One output. */
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace lal
