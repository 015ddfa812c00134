#pragma once

#include <cstdint>

namespace kdeg {

// SplitMix64.  Every randomized routine in the library derives its stream
// from a user-visible seed through this generator, so identical seeds give
// identical runs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive, by rejection.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();  // full range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + x % span;
  }

 private:
  std::uint64_t state_;
};

// Independent stream id `k` from a root seed; used to split one CLI-level
// seed into per-trial / per-run substreams.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t k) {
  SplitMix64 g(root ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
  g.next();
  return g.next();
}

}  // namespace kdeg
