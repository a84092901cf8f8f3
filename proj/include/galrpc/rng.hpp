#pragma once

#include <cstdint>
#include <random>

namespace galrpc {

// All randomness flows through an explicitly passed generator so that every
// operation is a deterministic function of (inputs, seed).
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng seeded_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

// Independent per-trial generator: the i-th value of the splitmix64 stream
// starting at `master`. Used by the Monte-Carlo harnesses so trials can run
// in any order (or in parallel) with identical results.
inline Rng derive_rng(std::uint64_t master, std::uint64_t counter) {
  return Rng(splitmix64(master + counter * 0x9e3779b97f4a7c15ULL));
}

// Uniform integer in [0, bound) by rejection; bound >= 1.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace galrpc
