#pragma once

#include <cstdint>

namespace bqo {

// splitmix64. Audit reports must be byte-identical for identical seeds on
// every platform, and the output of std:: distributions is not specified,
// so the generator is pinned down to the bit level here.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, n); modulo bias is irrelevant at the tiny
  // ranges used here (pools of at most a few thousand elements).
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

// Derives an independent stream for sample #i of a seeded run.
inline uint64_t split_seed(uint64_t seed, uint64_t i) {
  Rng r(seed ^ (0xD1B54A32D192ED03ull * (i + 1)));
  return r.next();
}

}  // namespace bqo
