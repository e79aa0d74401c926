#pragma once

#include <cstdint>

namespace gkd {

// splitmix64: tiny, well-studied, and identical on every platform, which is
// all the experiment protocol needs from its shuffles.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw from [0, bound); bound must be positive. The modulo
  // bias is irrelevant at the scales used here and keeps streams portable.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace gkd
