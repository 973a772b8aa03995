#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "benford/errors.hpp"
#include "benford/histogram.hpp"

namespace benford {

// strict: any malformed line aborts with a ParseError carrying the line
// number. skip: malformed lines are counted and dropped. Strict is the
// default; silently losing rows would skew digit proportions invisibly.
enum class ParseMode { strict, skip };

struct ParseStats {
  std::uint64_t lines = 0;     // physical lines seen
  std::uint64_t comments = 0;  // '#'-prefixed
  std::uint64_t records = 0;   // edges / data rows accepted
  std::uint64_t skipped = 0;   // malformed, skip mode only

  bool operator==(const ParseStats&) const = default;
};

// Degrees keyed by node id. A node has an out-degree record only if it
// appeared as an edge source; nodes seen only as destinations have
// in-degree records alone. Callers that need "out-degree or unknown"
// semantics (ego analysis of partial crawls) rely on that distinction.
struct DegreeTable {
  std::unordered_map<std::uint64_t, std::uint64_t> out_degree;
  std::unordered_map<std::uint64_t, std::uint64_t> in_degree;
  std::uint64_t edge_count = 0;

  std::uint64_t node_count() const;  // distinct ids across both maps

  bool operator==(const DegreeTable&) const = default;
};

// DegreeTable plus adjacency, for per-user (egocentric) analysis.
struct Graph {
  DegreeTable degrees;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> out_edges;

  void add_edge(std::uint64_t src, std::uint64_t dst);
  bool contains(std::uint64_t node) const;
};

// One edge per line: "src dst", whitespace-separated nonnegative 64-bit
// ids. Lines starting with '#' are comments. LF or CRLF. Single pass,
// memory O(distinct nodes). Self-loops and duplicate edges count as-is.
DegreeTable parse_edge_list(std::istream& in, ParseMode mode = ParseMode::strict,
                            ParseStats* stats = nullptr);

// Same format, but also materializes adjacency (memory O(edges)).
Graph parse_edge_graph(std::istream& in, ParseMode mode = ParseMode::strict,
                       ParseStats* stats = nullptr);

// Streaming reader over a headered CSV of nonnegative integer columns
// (comma-separated, UTF-8, no quoting). Construction parses the header
// and resolves the requested column names; a missing name is a
// ConfigError. Empty cells are explicit missing values, never zero.
class CsvReader {
 public:
  struct Row {
    std::uint64_t number = 0;  // 1-based data row number (header excluded)
    std::vector<std::optional<std::uint64_t>> values;  // parallel to columns()
  };

  CsvReader(std::istream& in, std::vector<std::string> columns,
            ParseMode mode = ParseMode::strict);

  // Advances to the next data row. Returns false at end of input.
  bool next(Row& row);

  const std::vector<std::string>& columns() const { return columns_; }
  const ParseStats& stats() const { return stats_; }

 private:
  std::istream& in_;
  std::vector<std::string> columns_;
  std::vector<std::size_t> indices_;  // position of each requested column
  std::size_t field_count_ = 0;
  ParseMode mode_;
  ParseStats stats_;
  std::string line_;
};

// Accumulates one selected column into a histogram, single pass. Zeros go
// to excluded_zero; missing cells are not counted at all.
FsdHistogram column_histogram(CsvReader& reader, std::size_t column_index = 0);

// All requested columns in one pass over the stream.
std::vector<FsdHistogram> column_histograms(CsvReader& reader);

}  // namespace benford
