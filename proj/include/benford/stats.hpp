#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "benford/histogram.hpp"

namespace benford {

// Above this sample size the chi-square statistic is flagged: at such n
// even trivial deviations from the expected distribution blow the
// statistic up, so it must not be read as a significance verdict.
inline constexpr std::uint64_t kDefaultChiWarnThreshold = 10'000;

// Pearson product-moment correlation of two 9-vectors. Scale- and
// shift-invariant, so counts and proportions give the same r. Returns
// nullopt when the observed vector has zero variance (e.g. perfectly
// uniform proportions) instead of leaking NaN into reports. The result
// is clamped to [-1, 1].
std::optional<double> pearson_r(std::span<const double, 9> observed,
                                std::span<const double, 9> expected);

// Mean absolute deviation between two proportion vectors: (1/9) sum |o - e|.
double mad(std::span<const double, 9> observed, std::span<const double, 9> expected);

struct ChiSquareResult {
  double statistic = 0.0;
  bool large_n_warning = false;
};

// sum (count_d - n * e_d)^2 / (n * e_d) over the 9 digit bins.
double chi_square_statistic(std::span<const double, 9> counts, double n,
                            std::span<const double, 9> expected);

// Chi-square over a histogram's counts, with the large-n warning flag.
// Requires total >= 1.
ChiSquareResult chi_square(const FsdHistogram& hist, std::span<const double, 9> expected,
                           std::uint64_t warn_threshold = kDefaultChiWarnThreshold);

struct ConformanceOptions {
  std::uint64_t chi_warn_threshold = kDefaultChiWarnThreshold;
};

// Everything a reviewer needs to judge agreement with Benford's law.
// pearson_r is the primary score; mad and chi_square are supplementary
// (chi_square never stands alone -- see large_n_warning).
struct ConformanceReport {
  std::uint64_t n = 0;
  std::array<double, 9> observed{};
  std::array<double, 9> expected{};
  std::optional<double> pearson_r;
  double mad = 0.0;
  ChiSquareResult chi_square{};
  std::array<double, 9> deviation_pct{};  // 100 * |obs - exp| / exp, per digit
};

// Assemble the full report from a histogram. Throws DataError when the
// histogram is empty (total == 0).
ConformanceReport conformance(const FsdHistogram& hist, const ConformanceOptions& opts = {});

// Same report from observed proportions directly; counts are taken as
// observed * n. This is the kernel conformance() delegates to, exposed so
// exact proportion vectors can be scored without integer rounding.
ConformanceReport conformance_from_proportions(const std::array<double, 9>& observed,
                                               std::uint64_t n,
                                               const ConformanceOptions& opts = {});

}  // namespace benford
