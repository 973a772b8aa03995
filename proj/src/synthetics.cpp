#include "benford/synthetics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "benford/errors.hpp"

namespace benford {

const char* model_name(Model model) {
  switch (model) {
    case Model::log_uniform: return "log_uniform";
    case Model::power_law: return "power_law";
    case Model::pinterest_min5: return "pinterest_min5";
    case Model::botnet_band: return "botnet_band";
  }
  return "log_uniform";
}

Model model_from_name(const std::string& name) {
  if (name == "log_uniform") return Model::log_uniform;
  if (name == "power_law") return Model::power_law;
  if (name == "pinterest_min5") return Model::pinterest_min5;
  if (name == "botnet_band") return Model::botnet_band;
  throw ConfigError("unknown model: " + name);
}

namespace {

void require_decade_span(std::uint64_t lo, std::uint64_t hi, const char* model) {
  if (lo < 1) throw ConfigError(std::string(model) + ": lo must be at least 1");
  if (hi < 10 * lo) {
    throw ConfigError(std::string(model) + ": range must span at least one decade (hi >= 10*lo)");
  }
}

}  // namespace

void GeneratorSpec::validate() const {
  if (n < 1) throw ConfigError("generator: n must be at least 1");
  switch (model) {
    case Model::log_uniform:
      require_decade_span(lo, hi, "log_uniform");
      break;
    case Model::power_law:
      if (!(alpha > 1.0)) throw ConfigError("power_law: alpha must be greater than 1");
      require_decade_span(lo, hi, "power_law");
      break;
    case Model::pinterest_min5:
      if (force_min < 1) throw ConfigError("pinterest_min5: force_min must be at least 1");
      if (!(stick_q >= 0.0 && stick_q <= 1.0)) {
        throw ConfigError("pinterest_min5: stick_q must lie in [0, 1]");
      }
      if (!(alpha > 1.0)) throw ConfigError("pinterest_min5: alpha must be greater than 1");
      require_decade_span(lo, hi, "pinterest_min5");
      break;
    case Model::botnet_band:
      if (lo < 1) throw ConfigError("botnet_band: band start must be at least 1");
      if (hi < lo) throw ConfigError("botnet_band: band must satisfy lo <= hi");
      break;
  }
}

ValueGenerator::ValueGenerator(const GeneratorSpec& spec) : spec_(spec), rng_(spec.seed) {
  spec_.validate();
  switch (spec_.model) {
    case Model::log_uniform:
      log_lo_ = std::log10(static_cast<double>(spec_.lo));
      log_span_ = std::log10(static_cast<double>(spec_.hi)) - log_lo_;
      break;
    case Model::power_law:
    case Model::pinterest_min5: {
      const double one_minus_alpha = 1.0 - spec_.alpha;
      pl_head_ = std::pow(static_cast<double>(spec_.lo), one_minus_alpha);
      pl_spread_ = std::pow(static_cast<double>(spec_.hi) + 1.0, one_minus_alpha) - pl_head_;
      pl_inv_exp_ = 1.0 / one_minus_alpha;
      break;
    }
    case Model::botnet_band:
      break;
  }
}

std::uint64_t ValueGenerator::next_log_uniform() {
  const double u = log_lo_ + rng_.next_double() * log_span_;
  const double x = std::floor(std::pow(10.0, u));
  // pow can land a hair outside [lo, hi) at the span edges.
  const auto v = static_cast<std::uint64_t>(x);
  return std::clamp(v, spec_.lo, spec_.hi - 1);
}

std::uint64_t ValueGenerator::next_power_law() {
  const double u = rng_.next_double();
  const double x = std::pow(pl_head_ + u * pl_spread_, pl_inv_exp_);
  const auto v = static_cast<std::uint64_t>(std::floor(x));
  return std::clamp(v, spec_.lo, spec_.hi);
}

std::uint64_t ValueGenerator::next() {
  switch (spec_.model) {
    case Model::log_uniform:
      return next_log_uniform();
    case Model::power_law:
      return next_power_law();
    case Model::pinterest_min5: {
      // stick_q == 0 consumes no branch draw, so the stream degenerates to
      // plain power_law (with the force_min floor) exactly.
      if (spec_.stick_q > 0.0 && rng_.next_double() < spec_.stick_q) return spec_.force_min;
      return std::max(spec_.force_min, next_power_law());
    }
    case Model::botnet_band:
      return rng_.next_in(spec_.lo, spec_.hi);
  }
  return 0;  // unreachable
}

std::vector<std::uint64_t> generate_values(const GeneratorSpec& spec) {
  ValueGenerator gen(spec);
  std::vector<std::uint64_t> out;
  out.reserve(spec.n);
  for (std::uint64_t i = 0; i < spec.n; ++i) out.push_back(gen.next());
  return out;
}

FsdHistogram generate_histogram(const GeneratorSpec& spec) {
  ValueGenerator gen(spec);
  FsdHistogram hist;
  for (std::uint64_t i = 0; i < spec.n; ++i) hist.add(gen.next());
  return hist;
}

void GraphPlan::validate() const {
  if (groups.empty()) throw ConfigError("graph plan: no ego groups");
  for (const EgoGroup& g : groups) {
    if (g.ego_count < 1) throw ConfigError("graph plan: ego_count must be at least 1");
    if (g.friend_count < 1) throw ConfigError("graph plan: friend_count must be at least 1");
    GeneratorSpec model = g.degree_model;
    model.n = g.friend_count;  // per-friend draws; n in the plan entry is unused
    model.validate();
    // Degree models always emit >= 1 given lo/force_min >= 1, which
    // validate() just enforced; a zero-degree friend is unrepresentable.
  }
}

void EdgeListWriter::edge(std::uint64_t src, std::uint64_t dst) {
  char buf[48];
  char* p = buf;
  auto r1 = std::to_chars(p, buf + sizeof buf, src);
  p = r1.ptr;
  *p++ = ' ';
  auto r2 = std::to_chars(p, buf + sizeof buf, dst);
  p = r2.ptr;
  *p++ = '\n';
  out_.write(buf, p - buf);
}

GraphLayout build_synthetic_graph(const GraphPlan& plan, EdgeSink& sink) {
  plan.validate();

  GraphLayout layout;
  std::uint64_t total_egos = 0;
  std::uint64_t total_friends = 0;
  for (const EgoGroup& g : plan.groups) {
    layout.groups.push_back({total_egos + 1, g.ego_count});
    total_egos += g.ego_count;
    total_friends += g.ego_count * g.friend_count;
  }
  layout.friend_base = total_egos + 1;
  layout.filler_base = layout.friend_base + total_friends;

  std::uint64_t focal = 1;
  std::uint64_t next_friend = layout.friend_base;
  for (const EgoGroup& g : plan.groups) {
    GeneratorSpec model = g.degree_model;
    model.n = g.friend_count;
    for (std::uint64_t e = 0; e < g.ego_count; ++e, ++focal) {
      model.seed = derive_seed(plan.seed, focal);
      ValueGenerator degrees(model);
      for (std::uint64_t f = 0; f < g.friend_count; ++f) {
        const std::uint64_t friend_id = next_friend++;
        sink.edge(focal, friend_id);
        ++layout.edge_count;
        const std::uint64_t degree = degrees.next();
        for (std::uint64_t t = 0; t < degree; ++t) {
          sink.edge(friend_id, layout.filler_base + t);
          ++layout.edge_count;
        }
      }
    }
  }
  return layout;
}

void IdSamplingSpec::validate() const {
  if (space < 1) throw ConfigError("id sampling: space must be at least 1");
  if (stride < 1) throw ConfigError("id sampling: stride must be at least 1");
  if (!(miss_probability >= 0.0 && miss_probability < 1.0)) {
    throw ConfigError("id sampling: miss probability must lie in [0, 1)");
  }
}

std::vector<std::uint64_t> simulate_id_sampling(const IdSamplingSpec& spec) {
  spec.validate();
  SplitMix64 rng(spec.seed);
  std::vector<std::uint64_t> sampled;
  std::uint64_t id = 1;
  while (id <= spec.space) {
    if (spec.miss_probability > 0.0 && rng.next_double() < spec.miss_probability) {
      ++id;  // dead id: try the next one
      continue;
    }
    sampled.push_back(id);
    id += spec.stride;
  }
  return sampled;
}

}  // namespace benford
