#pragma once

#include <cstdint>

namespace edgepoly {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based 64-bit generator: draw i of key k is mix64(k + (i+1)*gamma).
/// Streams are split by hashing the stream index into a fresh key, so the
/// output of stream s never depends on how many draws other streams made.
/// The exact construction is documented in docs/RNG.md.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr CounterRng(std::uint64_t key) : key_(key) {}

  /// Independent child generator for stream `index`.
  constexpr CounterRng split(std::uint64_t index) const {
    return CounterRng(mix64(key_ ^ mix64(index + 0x632BE59BD9B4E019ULL)));
  }

  constexpr std::uint64_t next() { return mix64(key_ + (++counter_) * kGamma); }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace edgepoly
