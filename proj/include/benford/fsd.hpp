#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace benford {

// Powers of ten representable in 64 bits: 10^0 .. 10^19.
inline constexpr std::array<std::uint64_t, 20> kPow10 = {
    1ull,
    10ull,
    100ull,
    1000ull,
    10000ull,
    100000ull,
    1000000ull,
    10000000ull,
    100000000ull,
    1000000000ull,
    10000000000ull,
    100000000000ull,
    1000000000000ull,
    10000000000000ull,
    100000000000000ull,
    1000000000000000ull,
    10000000000000000ull,
    100000000000000000ull,
    1000000000000000000ull,
    10000000000000000000ull,
};

// First significant digit of a positive integer, exact over the full
// 64-bit range. Pure integer arithmetic: floor(log10 v) from the bit
// width, then one division. Zero has no significant digit.
inline unsigned fsd(std::uint64_t value) {
  if (value == 0) throw std::domain_error("fsd: no significant digit for zero");
  // (bit_width * 1233) >> 12 approximates log10(2^bits); off by at most one,
  // always from above, corrected by the table compare.
  const unsigned approx = static_cast<unsigned>((std::bit_width(value) * 1233) >> 12);
  const unsigned k = approx - (value < kPow10[approx] ? 1u : 0u);
  return static_cast<unsigned>(value / kPow10[k]);
}

// Benford's expected first-digit distribution: P(d) = log10(1 + 1/d).
const std::array<double, 9>& benford_expected();

}  // namespace benford
