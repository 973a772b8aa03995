#include "benford/report_json.hpp"

#include <charconv>
#include <ostream>

namespace benford {

namespace {

nlohmann::json opt_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

void append_double(std::string& line, double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  line.append(buf, r.ptr);
}

}  // namespace

nlohmann::json conformance_json(const ConformanceReport& report) {
  return nlohmann::json{
      {"n", report.n},
      {"observed", report.observed},
      {"expected", report.expected},
      {"pearson_r", opt_json(report.pearson_r)},
      {"mad", report.mad},
      {"chi_square",
       {{"statistic", report.chi_square.statistic},
        {"large_n_warning", report.chi_square.large_n_warning}}},
      {"deviation_pct", report.deviation_pct},
  };
}

nlohmann::json analyze_report_json(const std::string& input, const std::string& source_kind,
                                   const std::string& column, std::uint64_t excluded_zero,
                                   const ConformanceReport& report) {
  nlohmann::json j{
      {"command", "analyze"},
      {"input", input},
      {"source", source_kind},
      {"excluded_zero", excluded_zero},
      {"report", conformance_json(report)},
  };
  if (!column.empty()) j["column"] = column;
  return j;
}

nlohmann::json ego_report_json(const EgoReport& report) {
  return nlohmann::json{
      {"user", report.user},
      {"ego_size", report.ego_size},
      {"missing", report.missing},
      {"excluded_zero", report.hist.excluded_zero},
      {"bin", bin_name(report.bin)},
      {"report", conformance_json(report.report)},
  };
}

nlohmann::json ego_summary_json(const EgoSummary& summary,
                                const ClassificationThresholds& thresholds) {
  return nlohmann::json{
      {"summary",
       {
           {"candidates", summary.candidates},
           {"emitted", summary.emitted},
           {"skipped", summary.skipped},
           {"bins",
            {{"conformant", summary.bin_counts[0]},
             {"intermediate", summary.bin_counts[1]},
             {"suspicious", summary.bin_counts[2]},
             {"undefined", summary.bin_counts[3]}}},
           {"fraction_conformant", summary.fraction_conformant},
           {"fraction_suspicious", summary.fraction_suspicious},
           {"thresholds",
            {{"conformant_min", thresholds.conformant_min},
             {"suspicious_max", thresholds.suspicious_max},
             {"min_degree", thresholds.min_degree}}},
       }},
  };
}

nlohmann::json validate_report_json(const std::string& input,
                                    const std::vector<ColumnVerdict>& columns,
                                    const std::string& overall) {
  nlohmann::json cols = nlohmann::json::array();
  for (const ColumnVerdict& c : columns) {
    cols.push_back({
        {"column", c.column},
        {"excluded_zero", c.excluded_zero},
        {"verdict", c.verdict},
        {"report", conformance_json(c.report)},
    });
  }
  return nlohmann::json{
      {"command", "validate"},
      {"input", input},
      {"columns", cols},
      {"verdict", overall},
  };
}

nlohmann::json generator_spec_json(const GeneratorSpec& spec) {
  nlohmann::json j{
      {"model", model_name(spec.model)},
      {"n", spec.n},
      {"seed", spec.seed},
  };
  switch (spec.model) {
    case Model::log_uniform:
      j["lo"] = spec.lo;
      j["hi"] = spec.hi;
      break;
    case Model::power_law:
      j["lo"] = spec.lo;
      j["hi"] = spec.hi;
      j["alpha"] = spec.alpha;
      break;
    case Model::pinterest_min5:
      j["lo"] = spec.lo;
      j["hi"] = spec.hi;
      j["alpha"] = spec.alpha;
      j["force_min"] = spec.force_min;
      j["stick_q"] = spec.stick_q;
      break;
    case Model::botnet_band:
      j["lo"] = spec.lo;
      j["hi"] = spec.hi;
      break;
  }
  return j;
}

nlohmann::json manifest_json(const GeneratorSpec& spec, const std::string& format,
                             std::uint64_t records, const std::string& digest) {
  return nlohmann::json{
      {"spec", generator_spec_json(spec)},
      {"format", format},
      {"records", records},
      {"digest", digest},
  };
}

void write_digit_csv(std::ostream& out, const ConformanceReport& report) {
  out << "digit,observed,expected,deviation_pct\n";
  std::string line;
  for (int d = 1; d <= 9; ++d) {
    line.clear();
    line.push_back(static_cast<char>('0' + d));
    line.push_back(',');
    append_double(line, report.observed[d - 1]);
    line.push_back(',');
    append_double(line, report.expected[d - 1]);
    line.push_back(',');
    append_double(line, report.deviation_pct[d - 1]);
    line.push_back('\n');
    out << line;
  }
}

}  // namespace benford
