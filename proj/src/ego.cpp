#include "benford/ego.hpp"

#include <algorithm>

namespace benford {

const char* bin_name(Bin bin) {
  switch (bin) {
    case Bin::conformant: return "conformant";
    case Bin::intermediate: return "intermediate";
    case Bin::suspicious: return "suspicious";
    case Bin::undefined: return "undefined";
  }
  return "undefined";
}

void ClassificationThresholds::validate() const {
  if (!(suspicious_max < conformant_min)) {
    throw ConfigError("thresholds: suspicious_max must be below conformant_min");
  }
  if (min_degree < 1) throw ConfigError("thresholds: min_degree must be at least 1");
}

EgoFriendCounts ego_histogram(const Graph& graph, std::uint64_t user,
                              DegreeDirection direction) {
  if (!graph.contains(user)) {
    throw DataError("ego: unknown user id " + std::to_string(user));
  }
  EgoFriendCounts out;
  auto adj = graph.out_edges.find(user);
  if (adj == graph.out_edges.end()) return out;  // present but follows nobody
  const auto& degrees = direction == DegreeDirection::out ? graph.degrees.out_degree
                                                          : graph.degrees.in_degree;
  for (std::uint64_t friend_id : adj->second) {
    auto it = degrees.find(friend_id);
    if (it == degrees.end()) {
      ++out.missing;
    } else {
      out.hist.add(it->second);
    }
  }
  return out;
}

Bin classify_r(std::optional<double> r, const ClassificationThresholds& thresholds) {
  if (!r) return Bin::undefined;
  if (*r >= thresholds.conformant_min) return Bin::conformant;
  if (*r < thresholds.suspicious_max) return Bin::suspicious;
  return Bin::intermediate;
}

Bin classify(const ConformanceReport& report, const ClassificationThresholds& thresholds) {
  return classify_r(report.pearson_r, thresholds);
}

namespace {

EgoReport score_ego(const Graph& graph, std::uint64_t user, const EgoScanOptions& opts) {
  EgoReport rep;
  rep.user = user;
  EgoFriendCounts counts = ego_histogram(graph, user, opts.direction);
  rep.ego_size = counts.ego_size();
  rep.missing = counts.missing;
  rep.hist = counts.hist;
  if (rep.hist.total > 0) {
    rep.report = conformance(rep.hist, ConformanceOptions{opts.chi_warn_threshold});
    rep.bin = classify(rep.report, opts.thresholds);
  } else {
    // Every included friend had a zero degree record: nothing to correlate.
    rep.report.expected = benford_expected();
    rep.bin = Bin::undefined;
  }
  return rep;
}

EgoScanResult scan_impl(const Graph& graph, const EgoScanOptions& opts, bool parallel) {
  opts.thresholds.validate();

  std::vector<std::uint64_t> candidates;
  candidates.reserve(graph.out_edges.size());
  for (const auto& [user, adj] : graph.out_edges) candidates.push_back(user);
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::optional<EgoReport>> slots(candidates.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(candidates.size()); ++i) {
      const auto idx = static_cast<std::size_t>(i);
      EgoReport rep = score_ego(graph, candidates[idx], opts);
      if (rep.ego_size >= opts.thresholds.min_degree) slots[idx] = std::move(rep);
    }
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      EgoReport rep = score_ego(graph, candidates[i], opts);
      if (rep.ego_size >= opts.thresholds.min_degree) slots[i] = std::move(rep);
    }
  }

  EgoScanResult result;
  result.summary.candidates = candidates.size();
  for (auto& slot : slots) {
    if (slot) {
      result.reports.push_back(std::move(*slot));
    } else {
      ++result.summary.skipped;
    }
  }
  result.summary.emitted = result.reports.size();

  std::uint64_t conformant_n = 0, suspicious_n = 0;
  for (const EgoReport& rep : result.reports) {
    ++result.summary.bin_counts[static_cast<std::size_t>(rep.bin)];
    if (rep.report.pearson_r) {
      if (*rep.report.pearson_r >= opts.thresholds.conformant_min) ++conformant_n;
      if (*rep.report.pearson_r < opts.thresholds.suspicious_max) ++suspicious_n;
    }
  }
  if (result.summary.emitted > 0) {
    const double emitted = static_cast<double>(result.summary.emitted);
    result.summary.fraction_conformant = static_cast<double>(conformant_n) / emitted;
    result.summary.fraction_suspicious = static_cast<double>(suspicious_n) / emitted;
  }
  return result;
}

}  // namespace

EgoScanResult scan_egos_serial(const Graph& graph, const EgoScanOptions& opts) {
  return scan_impl(graph, opts, false);
}

EgoScanResult scan_egos(const Graph& graph, const EgoScanOptions& opts) {
#ifdef _OPENMP
  return scan_impl(graph, opts, true);
#else
  return scan_impl(graph, opts, false);
#endif
}

void sort_reports_for_review(std::vector<EgoReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const EgoReport& a, const EgoReport& b) {
    const bool da = a.report.pearson_r.has_value();
    const bool db = b.report.pearson_r.has_value();
    if (da != db) return da;  // defined r sorts before undefined
    if (da && db && *a.report.pearson_r != *b.report.pearson_r) {
      return *a.report.pearson_r < *b.report.pearson_r;
    }
    return a.user < b.user;
  });
}

}  // namespace benford
