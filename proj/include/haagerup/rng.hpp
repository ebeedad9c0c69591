#pragma once

#include <cstdint>

namespace haagerup {

/// SplitMix64. The whole stream is a function of the 64-bit seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on {0, ..., bound - 1}; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    // Rejection keeps the distribution exact.
    std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % bound;
  }

  /// An independent stream derived from this seed and a stream label.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t label) noexcept {
    SplitMix64 mix(seed ^ (label * 0xd1b54a32d192ed03ULL));
    return SplitMix64(mix.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace haagerup
