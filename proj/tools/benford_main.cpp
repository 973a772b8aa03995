// benford: first-significant-digit conformance analysis for social-graph
// data. Subcommands: analyze, ego, validate, generate, plot-data.
//
// Exit codes: 0 success; 1 validate found a FAIL verdict; 2 configuration
// error (flags, paths, parameters); 3 data error (malformed input, empty
// sample).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "benford/digest.hpp"
#include "benford/ego.hpp"
#include "benford/errors.hpp"
#include "benford/fsd.hpp"
#include "benford/histogram.hpp"
#include "benford/ingest.hpp"
#include "benford/report_json.hpp"
#include "benford/stats.hpp"
#include "benford/synthetics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidateFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;

struct CommonOptions {
  std::string input;
  std::string output;  // empty or "-" means stdout
  std::string format;  // "", "edges", "csv"
  std::vector<std::string> columns;
  bool skip = false;
  std::uint64_t chi_warn = benford::kDefaultChiWarnThreshold;
  std::string direction = "out";
};

benford::ParseMode parse_mode(const CommonOptions& opts) {
  return opts.skip ? benford::ParseMode::skip : benford::ParseMode::strict;
}

benford::DegreeDirection degree_direction(const std::string& name) {
  if (name == "out") return benford::DegreeDirection::out;
  if (name == "in") return benford::DegreeDirection::in;
  throw benford::ConfigError("direction must be \"out\" or \"in\"");
}

std::string infer_format(const CommonOptions& opts) {
  if (!opts.format.empty()) return opts.format;
  if (opts.input.size() >= 4 && opts.input.ends_with(".csv")) return "csv";
  return "edges";
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw benford::ConfigError("cannot open input: " + path);
  return in;
}

// Output destination: a file, or stdout for "-"/empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw benford::ConfigError("cannot open output: " + path);
    }
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool to_stdout() const { return file_ == nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Human-readable status lines go to stdout when the report goes to a
// file, and to stderr when the report itself occupies stdout.
std::ostream& status(const Output& out) { return out.to_stdout() ? std::cerr : std::cout; }

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_columns) {
  cmd->add_option("-i,--input", opts.input, "Input file")->required();
  cmd->add_option("-o,--output", opts.output, "Output file (default: stdout)");
  cmd->add_option("--format", opts.format, "Input format: edges or csv (default: by extension)")
      ->check(CLI::IsMember({"edges", "csv"}));
  if (with_columns) {
    cmd->add_option("--column", opts.columns, "CSV column to analyze (repeatable)");
  }
  cmd->add_flag("--skip,!--strict", opts.skip,
                "Skip malformed lines instead of failing (default: strict)");
  cmd->add_option("--chi-warn", opts.chi_warn,
                  "Sample size above which the chi-square statistic is flagged");
  cmd->add_option("--direction", opts.direction, "Degree direction for edge inputs: out or in")
      ->check(CLI::IsMember({"out", "in"}));
}

struct HistogramSource {
  benford::FsdHistogram hist;
  std::string source_kind;
  std::string column;
};

// One histogram from an edge list (degree mode) or a one-column CSV.
HistogramSource load_histogram(const CommonOptions& opts) {
  HistogramSource out;
  const std::string format = infer_format(opts);
  if (format == "edges") {
    auto direction = degree_direction(opts.direction);
    auto in = open_input(opts.input);
    benford::DegreeTable table = benford::parse_edge_list(in, parse_mode(opts));
    const auto& degrees = direction == benford::DegreeDirection::out ? table.out_degree
                                                                     : table.in_degree;
    for (const auto& [node, degree] : degrees) out.hist.add(degree);
    out.source_kind = direction == benford::DegreeDirection::out ? "edges-out" : "edges-in";
  } else {
    if (opts.columns.size() != 1) {
      throw benford::ConfigError("csv input needs exactly one --column");
    }
    auto in = open_input(opts.input);
    benford::CsvReader reader(in, opts.columns, parse_mode(opts));
    out.hist = benford::column_histogram(reader);
    out.source_kind = "csv";
    out.column = opts.columns[0];
  }
  return out;
}

void print_summary_line(std::ostream& os, const benford::ConformanceReport& rep) {
  os << "n=" << rep.n << " r=";
  if (rep.pearson_r) {
    os << *rep.pearson_r;
  } else {
    os << "undefined";
  }
  os << " mad=" << rep.mad << " chi_square=" << rep.chi_square.statistic;
  if (rep.chi_square.large_n_warning) {
    os << " (large-n: not a significance test)";
  }
  os << "\n";
}

int cmd_analyze(const CommonOptions& opts, const std::string& digits_csv) {
  HistogramSource src = load_histogram(opts);
  benford::ConformanceReport rep =
      benford::conformance(src.hist, benford::ConformanceOptions{opts.chi_warn});

  Output out(opts.output);
  out.stream() << benford::analyze_report_json(opts.input, src.source_kind, src.column,
                                               src.hist.excluded_zero, rep)
                      .dump(2)
               << "\n";
  if (!digits_csv.empty()) {
    Output csv(digits_csv);
    benford::write_digit_csv(csv.stream(), rep);
  }
  print_summary_line(status(out), rep);
  return kExitOk;
}

int cmd_plot_data(const CommonOptions& opts) {
  HistogramSource src = load_histogram(opts);
  benford::ConformanceReport rep =
      benford::conformance(src.hist, benford::ConformanceOptions{opts.chi_warn});
  Output out(opts.output);
  benford::write_digit_csv(out.stream(), rep);
  return kExitOk;
}

int cmd_ego(const CommonOptions& opts, benford::ClassificationThresholds thresholds) {
  thresholds.validate();
  auto in = open_input(opts.input);
  benford::Graph graph = benford::parse_edge_graph(in, parse_mode(opts));

  benford::EgoScanOptions scan_opts;
  scan_opts.thresholds = thresholds;
  scan_opts.direction = degree_direction(opts.direction);
  scan_opts.chi_warn_threshold = opts.chi_warn;
  benford::EgoScanResult result = benford::scan_egos(graph, scan_opts);
  benford::sort_reports_for_review(result.reports);

  Output out(opts.output);
  for (const benford::EgoReport& rep : result.reports) {
    out.stream() << benford::ego_report_json(rep).dump() << "\n";
  }
  out.stream() << benford::ego_summary_json(result.summary, thresholds).dump() << "\n";

  status(out) << "egos: " << result.summary.emitted << " scored, " << result.summary.skipped
              << " below min-degree; conformant " << result.summary.bin_counts[0]
              << ", intermediate " << result.summary.bin_counts[1] << ", suspicious "
              << result.summary.bin_counts[2] << ", undefined " << result.summary.bin_counts[3]
              << "\n";
  return kExitOk;
}

int cmd_validate(const CommonOptions& opts, double pass_r, double warn_r) {
  if (!(warn_r < pass_r)) {
    throw benford::ConfigError("validate: --warn-r must be below --pass-r");
  }
  if (infer_format(opts) != "csv") {
    throw benford::ConfigError("validate expects a CSV input");
  }
  if (opts.columns.empty()) {
    throw benford::ConfigError("validate needs at least one --column");
  }

  auto in = open_input(opts.input);
  benford::CsvReader reader(in, opts.columns, parse_mode(opts));
  std::vector<benford::FsdHistogram> hists = benford::column_histograms(reader);

  std::vector<benford::ColumnVerdict> verdicts;
  bool any_fail = false;
  for (std::size_t c = 0; c < hists.size(); ++c) {
    benford::ColumnVerdict v;
    v.column = opts.columns[c];
    v.excluded_zero = hists[c].excluded_zero;
    if (hists[c].total == 0) {
      throw benford::DataError("validate: column \"" + v.column + "\" has no nonzero values");
    }
    v.report = benford::conformance(hists[c], benford::ConformanceOptions{opts.chi_warn});
    if (v.report.pearson_r && *v.report.pearson_r > pass_r) {
      v.verdict = "PASS";
    } else if (v.report.pearson_r && *v.report.pearson_r > warn_r) {
      v.verdict = "WARN";
    } else {
      v.verdict = "FAIL";
    }
    any_fail = any_fail || v.verdict == "FAIL";
    verdicts.push_back(std::move(v));
  }

  std::string overall = "PASS";
  for (const auto& v : verdicts) {
    if (v.verdict == "FAIL") overall = "FAIL";
    if (v.verdict == "WARN" && overall == "PASS") overall = "WARN";
  }

  Output out(opts.output);
  out.stream() << benford::validate_report_json(opts.input, verdicts, overall).dump(2) << "\n";
  for (const auto& v : verdicts) {
    status(out) << v.column << ": " << v.verdict << " (r=";
    if (v.report.pearson_r) {
      status(out) << *v.report.pearson_r;
    } else {
      status(out) << "undefined";
    }
    status(out) << ", n=" << v.report.n << ")\n";
  }
  return any_fail ? kExitValidateFail : kExitOk;
}

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw benford::ConfigError("cannot reopen for digest: " + path);
  benford::Fnv1a64 h;
  std::vector<char> buf(1 << 20);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    h.update(std::string_view(buf.data(), static_cast<std::size_t>(in.gcount())));
  }
  return h.hex();
}

struct GenerateOptions {
  CommonOptions common;
  benford::GeneratorSpec spec;
  std::string model_name = "log_uniform";
  std::string column = "value";
  // edge-graph plan
  std::uint64_t egos = 0;
  std::uint64_t ego_size = 100;
  std::uint64_t inject_egos = 0;
  std::uint64_t inject_lo = 400;
  std::uint64_t inject_hi = 600;
};

int cmd_generate(GenerateOptions& g) {
  g.spec.model = benford::model_from_name(g.model_name);
  const std::string format = g.common.format.empty() ? "csv" : g.common.format;
  if (g.common.output.empty() || g.common.output == "-") {
    throw benford::ConfigError("generate needs --output (a manifest is written next to it)");
  }

  nlohmann::json manifest;
  std::uint64_t records = 0;
  if (format == "csv") {
    g.spec.validate();
    {
      Output out(g.common.output);
      out.stream() << "id," << g.column << "\n";
      benford::ValueGenerator gen(g.spec);
      std::string line;
      for (std::uint64_t i = 1; i <= g.spec.n; ++i) {
        line = std::to_string(i);
        line.push_back(',');
        line += std::to_string(gen.next());
        line.push_back('\n');
        out.stream() << line;
      }
    }
    records = g.spec.n;
    manifest = benford::manifest_json(g.spec, "csv", records, digest_file(g.common.output));
  } else {
    if (g.egos < 1) throw benford::ConfigError("generate --format edges needs --egos");
    benford::GraphPlan plan;
    plan.seed = g.spec.seed;
    benford::EgoGroup conformant;
    conformant.ego_count = g.egos;
    conformant.friend_count = g.ego_size;
    conformant.degree_model = g.spec;
    plan.groups.push_back(conformant);

    benford::GeneratorSpec injected_spec;
    if (g.inject_egos > 0) {
      injected_spec.model = benford::Model::botnet_band;
      injected_spec.lo = g.inject_lo;
      injected_spec.hi = g.inject_hi;
      benford::EgoGroup injected;
      injected.ego_count = g.inject_egos;
      injected.friend_count = g.ego_size;
      injected.degree_model = injected_spec;
      plan.groups.push_back(injected);
    }

    benford::GraphLayout layout;
    {
      Output out(g.common.output);
      benford::EdgeListWriter writer(out.stream());
      layout = benford::build_synthetic_graph(plan, writer);
    }
    records = layout.edge_count;
    manifest = benford::manifest_json(g.spec, "edges", records, digest_file(g.common.output));
    nlohmann::json graph{
        {"egos", g.egos + g.inject_egos},
        {"ego_size", g.ego_size},
        {"injected", g.inject_egos},
        {"edge_count", layout.edge_count},
    };
    if (g.inject_egos > 0) {
      graph["injected_first_id"] = layout.groups[1].first_focal;
      injected_spec.n = g.ego_size;
      graph["injected_spec"] = benford::generator_spec_json(injected_spec);
    }
    manifest["graph"] = graph;
  }

  const std::string manifest_path = g.common.output + ".manifest.json";
  {
    Output mout(manifest_path);
    mout.stream() << manifest.dump(2) << "\n";
  }
  std::cout << "wrote " << g.common.output << " (" << records << " records), manifest "
            << manifest_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-significant-digit (Benford) analysis for social-network data"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML config file");

  CommonOptions analyze_opts;
  std::string digits_csv;
  CLI::App* analyze = app.add_subcommand("analyze", "Score one value population against Benford");
  add_common(analyze, analyze_opts, true);
  analyze->add_option("--digits-csv", digits_csv, "Also write the per-digit table (plot data)");

  CommonOptions ego_opts;
  benford::ClassificationThresholds thresholds;
  std::string thresholds_arg;
  CLI::App* ego = app.add_subcommand("ego", "Score every user's egocentric network");
  add_common(ego, ego_opts, false);
  ego->add_option("--min-degree", thresholds.min_degree,
                  "Minimum ego size for a report (default 100)");
  ego->add_option("--thresholds", thresholds_arg,
                  "Classification cut points CONF,SUSP (default 0.9,0.5)");

  CommonOptions validate_opts;
  double pass_r = 0.99;
  double warn_r = 0.9;
  CLI::App* validate = app.add_subcommand("validate", "Verdict per CSV column: PASS/WARN/FAIL");
  add_common(validate, validate_opts, true);
  validate->add_option("--pass-r", pass_r, "Minimum r for PASS (exclusive, default 0.99)");
  validate->add_option("--warn-r", warn_r, "Minimum r for WARN (exclusive, default 0.9)");

  GenerateOptions gen;
  CLI::App* generate = app.add_subcommand("generate", "Write a synthetic fixture plus manifest");
  generate->add_option("-o,--output", gen.common.output, "Output file")->required();
  generate->add_option("--format", gen.common.format, "Fixture format: csv (default) or edges")
      ->check(CLI::IsMember({"edges", "csv"}));
  generate->add_option("--model", gen.model_name, "log_uniform, power_law, pinterest_min5, botnet_band");
  generate->add_option("--n", gen.spec.n, "Population size");
  generate->add_option("--seed", gen.spec.seed, "Generator seed");
  generate->add_option("--lo", gen.spec.lo, "Range start (log_uniform: inclusive)");
  generate->add_option("--hi", gen.spec.hi, "Range end (log_uniform: exclusive; others: inclusive)");
  generate->add_option("--alpha", gen.spec.alpha, "Power-law exponent");
  generate->add_option("--force-min", gen.spec.force_min, "pinterest_min5: forced minimum m");
  generate->add_option("--stick-q", gen.spec.stick_q, "pinterest_min5: probability of emitting exactly m");
  generate->add_option("--column", gen.column, "CSV value column name (default \"value\")");
  generate->add_option("--egos", gen.egos, "edges: number of focal users");
  generate->add_option("--ego-size", gen.ego_size, "edges: friends per focal user");
  generate->add_option("--inject-egos", gen.inject_egos, "edges: extra botnet-band focal users");
  generate->add_option("--inject-lo", gen.inject_lo, "edges: injected degree band start");
  generate->add_option("--inject-hi", gen.inject_hi, "edges: injected degree band end");

  CommonOptions plot_opts;
  CLI::App* plot = app.add_subcommand("plot-data", "Write the per-digit observed/expected table");
  add_common(plot, plot_opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_opts, digits_csv);
    if (plot->parsed()) return cmd_plot_data(plot_opts);
    if (ego->parsed()) {
      if (!thresholds_arg.empty()) {
        std::istringstream ss(thresholds_arg);
        char comma = 0;
        if (!(ss >> thresholds.conformant_min >> comma >> thresholds.suspicious_max) ||
            comma != ',') {
          throw benford::ConfigError("--thresholds expects CONF,SUSP (e.g. 0.9,0.5)");
        }
      }
      return cmd_ego(ego_opts, thresholds);
    }
    if (validate->parsed()) return cmd_validate(validate_opts, pass_r, warn_r);
    if (generate->parsed()) return cmd_generate(gen);
  } catch (const benford::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const benford::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitConfig;
}
