#include "benford/ingest.hpp"

#include <charconv>
#include <istream>

namespace benford {

namespace {

inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline bool is_ws(char c) { return c == ' ' || c == '\t'; }

// Parses "src dst" with arbitrary blank runs. Returns false on malformed.
bool parse_edge_line(const std::string& line, std::uint64_t& src, std::uint64_t& dst) {
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end && is_ws(*p)) ++p;
  auto r1 = std::from_chars(p, end, src);
  if (r1.ec != std::errc{} || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || !is_ws(*p)) return false;
  while (p < end && is_ws(*p)) ++p;
  auto r2 = std::from_chars(p, end, dst);
  if (r2.ec != std::errc{} || r2.ptr == p) return false;
  p = r2.ptr;
  while (p < end && is_ws(*p)) ++p;
  return p == end;
}

template <typename OnEdge>
void for_each_edge(std::istream& in, ParseMode mode, ParseStats* stats, OnEdge on_edge) {
  ParseStats local;
  std::string line;
  while (std::getline(in, line)) {
    ++local.lines;
    strip_cr(line);
    if (!line.empty() && line[0] == '#') {
      ++local.comments;
      continue;
    }
    std::uint64_t src = 0, dst = 0;
    if (!parse_edge_line(line, src, dst)) {
      if (mode == ParseMode::strict) {
        throw ParseError(local.lines, line, "expected \"src dst\"");
      }
      ++local.skipped;
      continue;
    }
    ++local.records;
    on_edge(src, dst);
  }
  if (stats) *stats = local;
}

}  // namespace

std::uint64_t DegreeTable::node_count() const {
  std::uint64_t n = out_degree.size();
  for (const auto& [id, deg] : in_degree) {
    if (!out_degree.contains(id)) ++n;
  }
  return n;
}

void Graph::add_edge(std::uint64_t src, std::uint64_t dst) {
  out_edges[src].push_back(dst);
  ++degrees.out_degree[src];
  ++degrees.in_degree[dst];
  ++degrees.edge_count;
}

bool Graph::contains(std::uint64_t node) const {
  return degrees.out_degree.contains(node) || degrees.in_degree.contains(node);
}

DegreeTable parse_edge_list(std::istream& in, ParseMode mode, ParseStats* stats) {
  DegreeTable table;
  for_each_edge(in, mode, stats, [&](std::uint64_t src, std::uint64_t dst) {
    ++table.out_degree[src];
    ++table.in_degree[dst];
    ++table.edge_count;
  });
  return table;
}

Graph parse_edge_graph(std::istream& in, ParseMode mode, ParseStats* stats) {
  Graph graph;
  for_each_edge(in, mode, stats,
                [&](std::uint64_t src, std::uint64_t dst) { graph.add_edge(src, dst); });
  return graph;
}

namespace {

// Splits a CSV line in place into field ranges. No quoting: the formats
// this reads are integer tables.
void split_fields(const std::string& line, std::vector<std::pair<std::size_t, std::size_t>>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.emplace_back(start, line.size());
      return;
    }
    out.emplace_back(start, comma);
    start = comma + 1;
  }
}

}  // namespace

CsvReader::CsvReader(std::istream& in, std::vector<std::string> columns, ParseMode mode)
    : in_(in), columns_(std::move(columns)), mode_(mode) {
  if (columns_.empty()) throw ConfigError("csv: no columns requested");
  if (!std::getline(in_, line_)) throw DataError("csv: missing header line");
  ++stats_.lines;
  strip_cr(line_);
  if (line_.size() >= 3 && line_.compare(0, 3, "\xEF\xBB\xBF") == 0) line_.erase(0, 3);

  std::vector<std::pair<std::size_t, std::size_t>> fields;
  split_fields(line_, fields);
  field_count_ = fields.size();
  indices_.reserve(columns_.size());
  for (const std::string& name : columns_) {
    std::size_t found = field_count_;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (line_.compare(fields[i].first, fields[i].second - fields[i].first, name) == 0) {
        found = i;
        break;
      }
    }
    if (found == field_count_) throw ConfigError("csv: column not found: " + name);
    indices_.push_back(found);
  }
}

bool CsvReader::next(Row& row) {
  std::vector<std::pair<std::size_t, std::size_t>> fields;
  while (std::getline(in_, line_)) {
    ++stats_.lines;
    strip_cr(line_);
    if (!line_.empty() && line_[0] == '#') {
      ++stats_.comments;
      continue;
    }
    split_fields(line_, fields);
    if (fields.size() != field_count_) {
      if (mode_ == ParseMode::strict) {
        throw ParseError(stats_.lines, line_, "field count mismatch");
      }
      ++stats_.skipped;
      continue;
    }
    row.values.assign(columns_.size(), std::nullopt);
    bool bad = false;
    for (std::size_t c = 0; c < indices_.size(); ++c) {
      const auto [from, to] = fields[indices_[c]];
      if (from == to) continue;  // empty cell: explicit missing value
      std::uint64_t v = 0;
      auto r = std::from_chars(line_.data() + from, line_.data() + to, v);
      if (r.ec != std::errc{} || r.ptr != line_.data() + to) {
        if (mode_ == ParseMode::strict) {
          throw ParseError(stats_.lines, line_,
                           "column \"" + columns_[c] + "\" is not a nonnegative integer");
        }
        bad = true;
        break;
      }
      row.values[c] = v;
    }
    if (bad) {
      ++stats_.skipped;
      continue;
    }
    ++stats_.records;
    row.number = stats_.records;
    return true;
  }
  return false;
}

FsdHistogram column_histogram(CsvReader& reader, std::size_t column_index) {
  FsdHistogram hist;
  CsvReader::Row row;
  while (reader.next(row)) {
    if (row.values[column_index]) hist.add(*row.values[column_index]);
  }
  return hist;
}

std::vector<FsdHistogram> column_histograms(CsvReader& reader) {
  std::vector<FsdHistogram> hists(reader.columns().size());
  CsvReader::Row row;
  while (reader.next(row)) {
    for (std::size_t c = 0; c < hists.size(); ++c) {
      if (row.values[c]) hists[c].add(*row.values[c]);
    }
  }
  return hists;
}

}  // namespace benford
