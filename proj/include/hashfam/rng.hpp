#pragma once

#include <cstdint>

namespace hashfam {

/// SplitMix64. Fixed generator so that runs are bit-reproducible across
/// platforms; every random decision in the construction draws from one
/// instance of this stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [1..m] by modulo rejection: draws are rejected while
  /// they fall in the tail of size 2^64 mod m, then reduced. Unbiased, and
  /// the draw sequence is part of the documented stream contract.
  int uniform_symbol(int m) {
    const std::uint64_t um = static_cast<std::uint64_t>(m);
    const std::uint64_t tail = (UINT64_MAX % um + 1) % um;  // 2^64 mod m
    std::uint64_t r = next();
    if (tail != 0) {
      while (r > UINT64_MAX - tail) r = next();
    }
    return static_cast<int>(r % um) + 1;
  }

  /// Uniform index in [0..count-1], same rejection scheme.
  std::uint64_t uniform_index(std::uint64_t count) {
    const std::uint64_t tail = (UINT64_MAX % count + 1) % count;
    std::uint64_t r = next();
    if (tail != 0) {
      while (r > UINT64_MAX - tail) r = next();
    }
    return r % count;
  }

 private:
  std::uint64_t state_;
};

}  // namespace hashfam
