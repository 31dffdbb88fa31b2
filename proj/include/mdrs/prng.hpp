#pragma once

#include <cstdint>

namespace mdrs {

// SplitMix64: the deterministic generator used by every randomized routine.
// Reports echo the name "splitmix64" together with the seed.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant at the
  // field sizes involved and keeps the stream layout stable.
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(next() % bound);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t state_;
};

// Deterministic per-stream seed derivation, used to give each simulation
// trial its own generator independent of scheduling.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xBF58476D1CE4E5B9ull * (index + 1)));
  return g.next();
}

inline constexpr const char* kPrngName = "splitmix64";

}  // namespace mdrs
