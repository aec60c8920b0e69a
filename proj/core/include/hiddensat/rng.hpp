#pragma once

#include <cstdint>

// Deterministic random number generation with explicitly pinned algorithms.
//
// Everything downstream (instance sampling, heuristic runs, sweeps) must be
// bit-identical across platforms and across thread schedules.  The standard
// <random> distributions are implementation-defined, so we carry our own
// small generator stack: splitmix64 for seeding and stream derivation,
// xoshiro256** for bulk output, and rejection sampling for bounded draws.

namespace hiddensat {

inline constexpr std::uint64_t kSplitmixGamma = 0x9e3779b97f4a7c15ull;

// One step of splitmix64 (Steele/Lea/Flood); advances `state` and returns
// the next output.  Used both as a seeder and as a mixing function.
constexpr std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += kSplitmixGamma);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Collapses a master seed and a sequence of stream indices into a fresh
// 64-bit seed.  Every independent unit of work (a clause draw, a trial, a
// sweep cell) gets its seed from derive_seed(master, indices...), which makes
// results independent of evaluation order and safe to parallelise.
template <class... Ids>
constexpr std::uint64_t derive_seed(std::uint64_t master, Ids... ids) noexcept {
  std::uint64_t state = master;
  std::uint64_t h = splitmix64_next(state);
  ((state ^= static_cast<std::uint64_t>(ids) + kSplitmixGamma + (h << 6),
    h ^= splitmix64_next(state)),
   ...);
  return h;
}

// xoshiro256** 1.0 (Blackman & Vigna, public domain reference
// implementation), seeded through splitmix64 as its authors recommend.
class Rng {
 public:
  explicit constexpr Rng(std::uint64_t seed) noexcept {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64_next(s);
  }

  constexpr std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform integer in [0, bound); bound >= 1.  Unbiased via rejection of
  // the incomplete top interval (2^64 mod bound values rejected).
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  constexpr bool coin() noexcept { return (next() >> 63) != 0; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4] = {};
};

}  // namespace hiddensat
