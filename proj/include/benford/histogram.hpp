#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "benford/fsd.hpp"

namespace benford {

// Counts of first significant digits over a population of nonnegative
// integers. Zeros carry no digit and are tallied separately instead of
// being dropped silently. Merge-capable: merging shard histograms is
// exactly equivalent to accumulating the concatenated streams.
struct FsdHistogram {
  std::array<std::uint64_t, 9> counts{};  // digit d lives at counts[d - 1]
  std::uint64_t excluded_zero = 0;
  std::uint64_t total = 0;  // == sum of counts

  void add(std::uint64_t value) {
    if (value == 0) {
      ++excluded_zero;
    } else {
      ++counts[fsd(value) - 1];
      ++total;
    }
  }

  void merge(const FsdHistogram& other) {
    for (int i = 0; i < 9; ++i) counts[i] += other.counts[i];
    excluded_zero += other.excluded_zero;
    total += other.total;
  }

  std::uint64_t count(unsigned digit) const { return counts[digit - 1]; }

  // Observed proportions; total must be positive.
  std::array<double, 9> proportions() const {
    std::array<double, 9> p{};
    const double n = static_cast<double>(total);
    for (int i = 0; i < 9; ++i) p[i] = static_cast<double>(counts[i]) / n;
    return p;
  }

  bool operator==(const FsdHistogram&) const = default;
};

// Serial reference accumulation. Kept as the correctness baseline for the
// parallel kernel; tests require bit-identical results from both.
FsdHistogram accumulate_serial(std::span<const std::uint64_t> values);

// OpenMP-sharded accumulation: one shard per thread, merged afterwards.
// Counts are integers, so the result is identical to accumulate_serial
// regardless of thread count. Falls back to serial without OpenMP.
FsdHistogram accumulate(std::span<const std::uint64_t> values);

}  // namespace benford
