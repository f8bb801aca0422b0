#pragma once

#include <cstdint>

namespace primroot {

// SplitMix64 (Steele--Lea--Flood).  The generator state is a plain 64-bit
// counter advanced by the golden-ratio increment and passed through a fixed
// avalanche mix, so output depends only on (seed, draw index) and is
// bit-identical across platforms.  Substreams are derived by mixing a stream
// key into the seed; the truncated-law sampler keys one substream per prime
// index.  The exact constants are documented in the README.
inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng64 {
 public:
  explicit constexpr Rng64(std::uint64_t state) : state_(state) {}

  static constexpr Rng64 substream(std::uint64_t seed, std::uint64_t key) {
    return Rng64(mix64(seed + kGoldenGamma) ^ mix64(key * kGoldenGamma + 0x243F6A8885A308D3ull));
  }

  constexpr std::uint64_t next() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // uniform in (0, 1]; never 0, so log(u) stays finite
  double next_unit_positive() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // uniform in [0, 1)
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace primroot
