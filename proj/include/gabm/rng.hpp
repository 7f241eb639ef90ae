#pragma once

#include <cstdint>

namespace gabm {

// SplitMix64 (Steele, Lea, Flood 2014). Pinned so that other-language
// reimplementations reproduce generated fixtures bit for bit; the bounded
// draw below is part of that contract.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], both inclusive. Computed as
  // lo + next_u64() % (hi - lo + 1); the modulo bias is < 2^-59 for the
  // spans used here (<= 36) and the formula is trivially portable.
  int next_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  // Uniform in [0, 1) from the top 53 bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
  }

 private:
  std::uint64_t state_;
};

}  // namespace gabm
