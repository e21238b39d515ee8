#pragma once

#include <cstdint>

namespace qwtrap {

// SplitMix64: a counter-based generator (Steele, Lea & Flood). Output j of a
// stream is a fixed bijective hash of key + j*gamma, so any (seed, trajectory
// index, step) triple maps to the same draw regardless of scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t key) : state_(key) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Decorrelated per-stream key from a base seed and a stream index.
  static std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace qwtrap
