#pragma once

#include <string>
#include <vector>

#include "sw/rng.hpp"

#ifdef SW_HAVE_OPENMP
#include <omp.h>
#endif

namespace sw {

// Stream of replica r in experiment `tag` under master seed `seed`.
inline Rng replica_rng(std::uint64_t seed, const std::string& tag, std::uint64_t r) {
  return Rng(seed).split(tag).split(r);
}

// Runs fn(r) for r = 0..n-1 and returns the results in replica order.
// jobs <= 1 takes the serial path; results never depend on jobs.
template <class F>
auto run_replicas(int n, int jobs, F fn) -> std::vector<decltype(fn(0))> {
  std::vector<decltype(fn(0))> out(n);
#ifdef SW_HAVE_OPENMP
  if (jobs > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (int r = 0; r < n; ++r) out[r] = fn(r);
    return out;
  }
#endif
  for (int r = 0; r < n; ++r) out[r] = fn(r);
  return out;
}

}  // namespace sw
