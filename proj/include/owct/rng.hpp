#pragma once

#include <cstdint>
#include <random>

namespace owct {

// Deterministic uniform helpers on top of mt19937_64. std::*_distribution
// is not pinned down by the standard, so experiment outputs would not be
// reproducible across standard libraries; these are.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n), n >= 1 (rejection sampling).
  uint64_t below(uint64_t n);

  // Integer in [lo, hi] inclusive.
  int64_t uniform_int(int64_t lo, int64_t hi);

  // Double in [0, 1) with 53 random bits.
  double uniform_unit();

 private:
  std::mt19937_64 engine_;
};

// Stateless mixer for deriving per-row seeds from (seed, instance, trial).
uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c);

}  // namespace owct
