#pragma once

#include <cstdint>
#include <random>

namespace trn {

/// SplitMix64 output function. Used to derive independent sub-seeds from a
/// master seed; the i-th derived seed is the i-th output of a SplitMix64
/// stream seeded with `master`.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed for sample `index` of an experiment with the given master seed.
/// Fixed function of (master, index): results never depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ull);
}

/// One pseudorandom bit at a time from std::mt19937_64, low bit of each
/// 64-bit word first. mt19937_64 is fully specified by the standard, so the
/// bit stream for a given seed is identical on every platform.
class BitStream {
 public:
  explicit BitStream(std::uint64_t seed) : gen_(seed) {}

  bool next_bit() {
    if (left_ == 0) {
      word_ = gen_();
      left_ = 64;
    }
    bool b = word_ & 1u;
    word_ >>= 1;
    --left_;
    return b;
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

}  // namespace trn
