#include "benford/stats.hpp"

#include <algorithm>
#include <cmath>

#include "benford/errors.hpp"
#include "benford/fsd.hpp"

namespace benford {

namespace {

double mean9(std::span<const double, 9> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / 9.0;
}

}  // namespace

std::optional<double> pearson_r(std::span<const double, 9> observed,
                                std::span<const double, 9> expected) {
  const double mo = mean9(observed);
  const double me = mean9(expected);
  double cov = 0.0, vo = 0.0, ve = 0.0;
  for (int i = 0; i < 9; ++i) {
    const double o = observed[i] - mo;
    const double e = expected[i] - me;
    cov += o * e;
    vo += o * o;
    ve += e * e;
  }
  if (vo == 0.0 || ve == 0.0) return std::nullopt;
  return std::clamp(cov / std::sqrt(vo * ve), -1.0, 1.0);
}

double mad(std::span<const double, 9> observed, std::span<const double, 9> expected) {
  double s = 0.0;
  for (int i = 0; i < 9; ++i) s += std::abs(observed[i] - expected[i]);
  return s / 9.0;
}

double chi_square_statistic(std::span<const double, 9> counts, double n,
                            std::span<const double, 9> expected) {
  double s = 0.0;
  for (int i = 0; i < 9; ++i) {
    const double e = n * expected[i];
    const double d = counts[i] - e;
    s += d * d / e;
  }
  return s;
}

ChiSquareResult chi_square(const FsdHistogram& hist, std::span<const double, 9> expected,
                           std::uint64_t warn_threshold) {
  std::array<double, 9> counts{};
  for (int i = 0; i < 9; ++i) counts[i] = static_cast<double>(hist.counts[i]);
  return ChiSquareResult{
      chi_square_statistic(counts, static_cast<double>(hist.total), expected),
      hist.total > warn_threshold,
  };
}

namespace {

ConformanceReport assemble(const std::array<double, 9>& observed,
                           const std::array<double, 9>& counts, std::uint64_t n,
                           const ConformanceOptions& opts) {
  ConformanceReport rep;
  rep.n = n;
  rep.observed = observed;
  rep.expected = benford_expected();
  rep.pearson_r = pearson_r(rep.observed, rep.expected);
  rep.mad = mad(rep.observed, rep.expected);
  rep.chi_square = ChiSquareResult{
      chi_square_statistic(counts, static_cast<double>(n), rep.expected),
      n > opts.chi_warn_threshold,
  };
  for (int i = 0; i < 9; ++i) {
    rep.deviation_pct[i] = 100.0 * std::abs(rep.observed[i] - rep.expected[i]) / rep.expected[i];
  }
  return rep;
}

}  // namespace

ConformanceReport conformance(const FsdHistogram& hist, const ConformanceOptions& opts) {
  if (hist.total == 0) throw DataError("conformance: empty sample (no nonzero values)");
  std::array<double, 9> counts{};
  for (int i = 0; i < 9; ++i) counts[i] = static_cast<double>(hist.counts[i]);
  return assemble(hist.proportions(), counts, hist.total, opts);
}

ConformanceReport conformance_from_proportions(const std::array<double, 9>& observed,
                                               std::uint64_t n,
                                               const ConformanceOptions& opts) {
  if (n == 0) throw DataError("conformance: empty sample (no nonzero values)");
  std::array<double, 9> counts{};
  for (int i = 0; i < 9; ++i) counts[i] = observed[i] * static_cast<double>(n);
  return assemble(observed, counts, n, opts);
}

}  // namespace benford
