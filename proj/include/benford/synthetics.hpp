#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "benford/histogram.hpp"
#include "benford/ingest.hpp"
#include "benford/rng.hpp"

namespace benford {

// log_uniform    floor(10^u), u uniform on [log10(lo), log10(hi)); over
//                whole decades its digit distribution is exactly Benford.
// power_law      floor of a continuous draw with density x^-alpha on
//                [lo, hi + 1), via inverse CDF.
// pinterest_min5 forced-minimum population: with probability stick_q emit
//                exactly force_min, else max(force_min, power-law draw).
//                Models platforms that make new users pick m follows up
//                front, which plants a digit spike at fsd(m).
// botnet_band    uniform integers on [lo, hi]; a narrow band concentrates
//                digits the way scripted accounts do.
enum class Model { log_uniform, power_law, pinterest_min5, botnet_band };

const char* model_name(Model model);
Model model_from_name(const std::string& name);  // ConfigError on unknown

struct GeneratorSpec {
  Model model = Model::log_uniform;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;

  // Range. log_uniform draws on [lo, hi); power_law and botnet_band treat
  // [lo, hi] as inclusive.
  std::uint64_t lo = 1;
  std::uint64_t hi = 1'000'000;

  double alpha = 2.0;  // power_law and the pinterest_min5 tail; > 1

  std::uint64_t force_min = 5;  // pinterest_min5: the forced pick count m
  double stick_q = 0.4;         // pinterest_min5: share that never grows past m

  void validate() const;  // ConfigError on violation
};

// Deterministic value stream: a pure function of (spec, seed).
class ValueGenerator {
 public:
  explicit ValueGenerator(const GeneratorSpec& spec);  // validates

  std::uint64_t next();
  const GeneratorSpec& spec() const { return spec_; }

 private:
  std::uint64_t next_log_uniform();
  std::uint64_t next_power_law();

  GeneratorSpec spec_;
  SplitMix64 rng_;
  double log_lo_ = 0.0, log_span_ = 0.0;       // log_uniform
  double pl_head_ = 0.0, pl_spread_ = 0.0, pl_inv_exp_ = 0.0;  // power_law
};

// Draws spec.n values into a vector.
std::vector<std::uint64_t> generate_values(const GeneratorSpec& spec);

// Streams spec.n values straight into a histogram (O(1) memory).
FsdHistogram generate_histogram(const GeneratorSpec& spec);

// ---- synthetic graphs ----------------------------------------------------

// A batch of focal users who all share a friend count and a friend-degree
// model. degree_model.n and .seed are ignored: each focal user draws
// friend_count degrees from a substream seeded derive_seed(plan seed,
// focal id).
struct EgoGroup {
  std::uint64_t ego_count = 0;
  std::uint64_t friend_count = 0;
  GeneratorSpec degree_model;
};

struct GraphPlan {
  std::vector<EgoGroup> groups;
  std::uint64_t seed = 0;

  void validate() const;
};

// Id layout of a generated graph. Focal users are numbered 1..N in plan
// order; each group's ids form the contiguous range [first_focal,
// first_focal + ego_count).
struct GraphLayout {
  struct GroupIds {
    std::uint64_t first_focal = 0;
    std::uint64_t ego_count = 0;
  };
  std::vector<GroupIds> groups;
  std::uint64_t friend_base = 0;  // first friend id
  std::uint64_t filler_base = 0;  // first filler id
  std::uint64_t edge_count = 0;
};

class EdgeSink {
 public:
  virtual ~EdgeSink() = default;
  virtual void edge(std::uint64_t src, std::uint64_t dst) = 0;
};

// Writes "src dst" lines in the edge-list format ingest reads back.
class EdgeListWriter final : public EdgeSink {
 public:
  explicit EdgeListWriter(std::ostream& out) : out_(out) {}
  void edge(std::uint64_t src, std::uint64_t dst) override;

 private:
  std::ostream& out_;
};

// Builds the Graph in memory with the same insertion semantics as
// parse_edge_graph, bypassing text round-trips.
class GraphBuilder final : public EdgeSink {
 public:
  void edge(std::uint64_t src, std::uint64_t dst) override { graph.add_edge(src, dst); }
  Graph graph;
};

// Emits a directed edge list realizing the plan: each focal user points
// at friend_count fresh friend nodes, and each friend points at that many
// filler nodes as its drawn degree, so parsing the output reproduces the
// planned degrees exactly.
GraphLayout build_synthetic_graph(const GraphPlan& plan, EdgeSink& sink);

// ---- id-space sampling ----------------------------------------------------

// Crawl pattern over a numeric id space: take an id, jump ahead by
// stride; when an id has no account behind it (probability
// miss_probability), step forward by one and retry.
struct IdSamplingSpec {
  std::uint64_t space = 0;  // ids run 1..space
  std::uint64_t stride = 1;
  double miss_probability = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

std::vector<std::uint64_t> simulate_id_sampling(const IdSamplingSpec& spec);

}  // namespace benford
