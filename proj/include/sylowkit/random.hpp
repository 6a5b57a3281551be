#pragma once

#include <cstdint>
#include <random>

namespace sylowkit {

/// Seeded generator shared by every sampling routine. Bounded draws use
/// rejection sampling on the raw 64-bit stream so that sequences are
/// identical across standard library implementations.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64/v1";
  static constexpr std::uint64_t kDefaultSeed = 20240229;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sylowkit
