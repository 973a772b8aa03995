#pragma once

#include <cstdint>

namespace benford {

// Stateless 64-bit finalizer from SplitMix64 (Steele, Lea & Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// SplitMix64 generator. This is the project's reproducibility contract:
// every synthetic fixture is a pure function of (spec, seed) through this
// generator, so identical seeds give identical streams across runs.
//
//   state += 0x9E3779B97F4A7C15; output = mix64(state)
//
// Doubles take the top 53 bits: (x >> 11) * 2^-53, uniform on [0,1).
// Bounded draws use rejection sampling (see next_below), never plain
// modulo, so integer streams are unbiased and platform-exact.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on [0, bound). bound >= 1. Rejects the low (2^64 mod bound)
  // raw values so every residue is equally likely.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x = next();
    while (x < reject) x = next();
    return x % bound;
  }

  // Uniform on [lo, hi], inclusive. Requires lo <= hi and hi - lo < 2^64 - 1.
  std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi) {
    return lo + next_below(hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

// Independent substream seed: derive_seed(master, k) for k = 0, 1, 2, ...
// gives decorrelated seeds for parallel or per-entity streams. The exact
// formula is part of the fixture contract:
//
//   derive_seed(master, key) = mix64(master ^ mix64(key ^ 0x5851F42D4C957F2D))
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t key) {
  return mix64(master ^ mix64(key ^ 0x5851F42D4C957F2Dull));
}

}  // namespace benford
