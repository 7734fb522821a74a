#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qvs {

// Process-wide toggle for the OpenMP hom-grid kernels.  The serial path is
// the reference implementation; the parallel one must produce byte-identical
// results, and tests compare the two on the same inputs.
void set_parallel_kernels(bool on);
bool parallel_kernels();

// True when the library was compiled with OpenMP support.
bool parallel_available();

namespace par {

struct ScanResult {
  std::vector<std::int64_t> failures;  // ascending
};

/// Every index in [0, n) where the predicate came back false. The predicate
/// must be pure: it may run on any thread, in any order. Both paths return
/// the identical ascending list, so downstream reports cannot drift.
template <typename Pred>
ScanResult scan_failures(std::int64_t n, Pred&& pred) {
  ScanResult out;
#ifdef _OPENMP
  if (parallel_kernels() && n > 4096) {
    std::vector<std::vector<std::int64_t>> local;
#pragma omp parallel
    {
#pragma omp single
      local.resize(static_cast<std::size_t>(omp_get_num_threads()));
      // implicit barrier above: 'local' is fully sized before any writes
      std::vector<std::int64_t>& mine =
          local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < n; ++i)
        if (!pred(i)) mine.push_back(i);
    }
    for (const auto& v : local)
      out.failures.insert(out.failures.end(), v.begin(), v.end());
    std::sort(out.failures.begin(), out.failures.end());
    return out;
  }
#endif
  for (std::int64_t i = 0; i < n; ++i)
    if (!pred(i)) out.failures.push_back(i);
  return out;
}

}  // namespace par

}  // namespace qvs
