// Throughput comparison of the serial reference kernels against the
// OpenMP ones: histogram accumulation over a value array and the per-user
// ego scan. Both pairs must produce identical results; this also asserts
// that on every run.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "benford/ego.hpp"
#include "benford/histogram.hpp"
#include "benford/synthetics.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    fn();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

void report(const std::string& name, std::uint64_t items, double serial_s, double parallel_s) {
  std::cout << name << "\n"
            << "  serial:   " << serial_s << " s  (" << static_cast<std::uint64_t>(items / serial_s)
            << " items/s)\n"
            << "  parallel: " << parallel_s << " s  ("
            << static_cast<std::uint64_t>(items / parallel_s) << " items/s)\n"
            << "  speedup:  " << serial_s / parallel_s << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t values_n = 20'000'000;
  std::uint64_t egos = 2000;
  std::uint64_t ego_size = 200;
  int reps = 3;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next_u64 = [&](const char* flag) -> std::uint64_t {
      if (i + 1 >= argc) {
        std::cerr << flag << " needs a value\n";
        std::exit(2);
      }
      return std::strtoull(argv[++i], nullptr, 10);
    };
    if (arg == "--values") {
      values_n = next_u64("--values");
    } else if (arg == "--egos") {
      egos = next_u64("--egos");
    } else if (arg == "--ego-size") {
      ego_size = next_u64("--ego-size");
    } else if (arg == "--reps") {
      reps = static_cast<int>(next_u64("--reps"));
    } else if (arg == "--smoke") {
      values_n = 200'000;
      egos = 100;
      ego_size = 100;
      reps = 1;
    } else {
      std::cerr << "usage: benford_bench [--values N] [--egos N] [--ego-size N] [--reps N] [--smoke]\n";
      return 2;
    }
  }

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n\n";
#else
  std::cout << "built without OpenMP: parallel kernels fall back to serial\n\n";
#endif

  // histogram accumulation
  benford::GeneratorSpec spec;
  spec.model = benford::Model::log_uniform;
  spec.n = values_n;
  spec.seed = 94;
  spec.lo = 1;
  spec.hi = 1'000'000;
  std::vector<std::uint64_t> values = benford::generate_values(spec);

  benford::FsdHistogram serial_hist, parallel_hist;
  const double hist_serial = best_of(reps, [&] { serial_hist = benford::accumulate_serial(values); });
  const double hist_parallel = best_of(reps, [&] { parallel_hist = benford::accumulate(values); });
  if (!(serial_hist == parallel_hist)) {
    std::cerr << "FATAL: parallel histogram differs from serial reference\n";
    return 1;
  }
  report("accumulate " + std::to_string(values_n) + " values", values_n, hist_serial,
         hist_parallel);

  // ego scan
  benford::GraphPlan plan;
  plan.seed = 57;
  benford::EgoGroup group;
  group.ego_count = egos;
  group.friend_count = ego_size;
  group.degree_model.model = benford::Model::log_uniform;
  group.degree_model.lo = 1;
  group.degree_model.hi = 1000;
  plan.groups.push_back(group);
  benford::GraphBuilder builder;
  benford::build_synthetic_graph(plan, builder);

  benford::EgoScanResult serial_scan, parallel_scan;
  const double scan_serial =
      best_of(reps, [&] { serial_scan = benford::scan_egos_serial(builder.graph); });
  const double scan_parallel = best_of(reps, [&] { parallel_scan = benford::scan_egos(builder.graph); });
  bool same = serial_scan.reports.size() == parallel_scan.reports.size();
  for (std::size_t i = 0; same && i < serial_scan.reports.size(); ++i) {
    same = serial_scan.reports[i].user == parallel_scan.reports[i].user &&
           serial_scan.reports[i].report.pearson_r == parallel_scan.reports[i].report.pearson_r;
  }
  if (!same) {
    std::cerr << "FATAL: parallel ego scan differs from serial reference\n";
    return 1;
  }
  std::cout << "\n";
  report("scan " + std::to_string(egos) + " egos of size " + std::to_string(ego_size), egos,
         scan_serial, scan_parallel);
  return 0;
}
