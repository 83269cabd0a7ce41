#pragma once

// Deterministic randomness. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard (w=64, n=312, m=156, r=31,
// a=0xB5026F5AA96619E9, u=29, d=0x5555555555555555, s=17,
// b=0x71D67FFFEDA60000, t=37, c=0xFFF7EEE000000000, l=43, f=6364136223846793005).
// The std distributions are implementation-defined, so bounded draws use
// multiply-high reduction instead: below(k) = (x * k) >> 64.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace gapramsey {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish draw from [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * bound) >> 64);
  }

  /// `count` distinct values from [0, universe), sorted ascending.
  /// Partial Fisher-Yates over the first `count` positions.
  std::vector<std::uint32_t> sample_sorted(std::uint32_t universe, std::uint32_t count) {
    std::vector<std::uint32_t> pool(universe);
    for (std::uint32_t i = 0; i < universe; ++i) pool[i] = i;
    for (std::uint32_t i = 0; i < count; ++i) {
      auto j = i + static_cast<std::uint32_t>(below(universe - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed for the attempt-th derived stream (golden-ratio increment).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt) {
  return seed + attempt * 0x9E3779B97F4A7C15ULL;
}

}  // namespace gapramsey
