#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "benford/ingest.hpp"
#include "benford/stats.hpp"

namespace benford {

enum class Bin { conformant, intermediate, suspicious, undefined };

const char* bin_name(Bin bin);

// Correlation cut points for the classification bins, plus the minimum
// ego size worth scoring. Boundaries are closed on the favorable side:
// r == conformant_min is conformant, r == suspicious_max is intermediate.
struct ClassificationThresholds {
  double conformant_min = 0.9;
  double suspicious_max = 0.5;
  std::uint64_t min_degree = 100;

  void validate() const;  // ConfigError unless suspicious_max < conformant_min, min_degree >= 1
};

// Which of a friend's degrees the ego histogram counts: out-degree
// (following counts, the default) or in-degree (follower counts).
enum class DegreeDirection { out, in };

struct EgoReport {
  std::uint64_t user = 0;
  std::uint64_t ego_size = 0;  // friends with a degree record (== hist.total + hist.excluded_zero)
  std::uint64_t missing = 0;   // friends with no degree record (partial crawl), never counted as zero
  FsdHistogram hist;
  ConformanceReport report;
  Bin bin = Bin::undefined;
};

struct EgoFriendCounts {
  FsdHistogram hist;
  std::uint64_t missing = 0;

  std::uint64_t ego_size() const { return hist.total + hist.excluded_zero; }
};

// FSD histogram over the degrees of everyone `user` points to. Friends
// with an explicit zero degree record land in excluded_zero; friends with
// no record at all are tallied as missing. Throws DataError when the user
// id is not in the graph.
EgoFriendCounts ego_histogram(const Graph& graph, std::uint64_t user,
                              DegreeDirection direction = DegreeDirection::out);

Bin classify_r(std::optional<double> r, const ClassificationThresholds& thresholds);
Bin classify(const ConformanceReport& report, const ClassificationThresholds& thresholds);

struct EgoScanOptions {
  ClassificationThresholds thresholds{};
  DegreeDirection direction = DegreeDirection::out;
  std::uint64_t chi_warn_threshold = kDefaultChiWarnThreshold;
};

struct EgoSummary {
  std::uint64_t candidates = 0;  // users with at least one outgoing edge
  std::uint64_t emitted = 0;
  std::uint64_t skipped = 0;  // candidates below min_degree
  std::array<std::uint64_t, 4> bin_counts{};  // indexed by Bin
  double fraction_conformant = 0.0;  // of emitted: r >= conformant_min
  double fraction_suspicious = 0.0;  // of emitted: r < suspicious_max
};

struct EgoScanResult {
  std::vector<EgoReport> reports;  // ordered by user id ascending
  EgoSummary summary;
};

// One report per candidate whose ego_size clears min_degree. Per-ego work
// is pure and independent; the OpenMP variant must match the serial one
// bit for bit.
EgoScanResult scan_egos_serial(const Graph& graph, const EgoScanOptions& opts = {});
EgoScanResult scan_egos(const Graph& graph, const EgoScanOptions& opts = {});

// Review order: most deviant first (r ascending), undefined r after all
// defined values, ties broken by user id.
void sort_reports_for_review(std::vector<EgoReport>& reports);

}  // namespace benford
