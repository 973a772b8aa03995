#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "benford/ego.hpp"
#include "benford/stats.hpp"
#include "benford/synthetics.hpp"

namespace benford {

// JSON layouts are a stable contract; the matching JSON Schemas ship
// under schemas/. Undefined correlation serializes as null, never NaN.

nlohmann::json conformance_json(const ConformanceReport& report);

nlohmann::json analyze_report_json(const std::string& input, const std::string& source_kind,
                                   const std::string& column, std::uint64_t excluded_zero,
                                   const ConformanceReport& report);

nlohmann::json ego_report_json(const EgoReport& report);
nlohmann::json ego_summary_json(const EgoSummary& summary,
                                const ClassificationThresholds& thresholds);

struct ColumnVerdict {
  std::string column;
  std::uint64_t excluded_zero = 0;
  ConformanceReport report;
  std::string verdict;  // PASS / WARN / FAIL
};

nlohmann::json validate_report_json(const std::string& input,
                                    const std::vector<ColumnVerdict>& columns,
                                    const std::string& overall);

nlohmann::json generator_spec_json(const GeneratorSpec& spec);

nlohmann::json manifest_json(const GeneratorSpec& spec, const std::string& format,
                             std::uint64_t records, const std::string& digest);

// Plot-ready per-digit table. Layout, exactly:
//   digit,observed,expected,deviation_pct
// then one row per digit 1..9, doubles in shortest round-trip form.
void write_digit_csv(std::ostream& out, const ConformanceReport& report);

}  // namespace benford
