#include "benford/histogram.hpp"

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace benford {

FsdHistogram accumulate_serial(std::span<const std::uint64_t> values) {
  FsdHistogram hist;
  for (std::uint64_t v : values) hist.add(v);
  return hist;
}

FsdHistogram accumulate(std::span<const std::uint64_t> values) {
#ifdef _OPENMP
  // Below this size the fork/join overhead dominates.
  constexpr std::size_t kParallelCutoff = 1u << 15;
  if (values.size() >= kParallelCutoff) {
    std::vector<FsdHistogram> shards;
#pragma omp parallel
    {
#pragma omp single
      shards.resize(static_cast<std::size_t>(omp_get_num_threads()));
      FsdHistogram& mine = shards[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(values.size()); ++i) {
        mine.add(values[static_cast<std::size_t>(i)]);
      }
    }
    FsdHistogram out;
    for (const FsdHistogram& s : shards) out.merge(s);
    return out;
  }
#endif
  return accumulate_serial(values);
}

}  // namespace benford
