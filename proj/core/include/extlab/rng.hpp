#pragma once

#include <cstdint>
#include <random>

namespace extlab {

// Deterministic RNG for the harness.  mt19937_64 output is bit-exact across
// platforms; std::uniform_int_distribution is not, so bounded sampling is done
// here by rejection.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n).  n must be positive.
  uint64_t below(uint64_t n) {
    // rejection sampling on the top of the range keeps it unbiased
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool chance(double prob) {
    return static_cast<double>(engine_()) < prob * 18446744073709551616.0;
  }

  // Stable derivation of per-case seeds from a master seed (splitmix64 mix).
  static uint64_t derive(uint64_t master, uint64_t index) {
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace extlab
