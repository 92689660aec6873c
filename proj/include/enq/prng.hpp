#pragma once
/*
 * SplitMix64 pseudo-random stream.
 *
 * This is the PRNG named by the reproducibility contract: a catalog entry is
 * a pure function of (field, params, seed), so the exact stream matters.
 * Reference sequence: state += 0x9E3779B97F4A7C15; z = state;
 * z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
 * z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
 */
#include <cstdint>

namespace enq {

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, n) by modulo; n is tiny (a field size) so the bias
  // of 2^64 mod n is negligible and, more importantly, deterministic.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

} // namespace enq
