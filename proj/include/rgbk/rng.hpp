#pragma once

#include <cstdint>

namespace rgbk {

// splitmix64. Hand-rolled so that reports are identical across platforms
// and standard library versions.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    return mix64(state);
  }

  // uniform in [0, bound), rejection sampled
  std::uint64_t below(std::uint64_t bound) {
    if (bound < 2) return 0;
    std::uint64_t limit = ~0ull - ~0ull % bound;
    for (;;) {
      std::uint64_t v = next();
      if (v < limit) return v % bound;
    }
  }

  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

// Stream seed for one trial; trials stay reproducible in isolation and
// independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed + 0x9e3779b97f4a7c15ull * (stream + 1));
}

}  // namespace rgbk
