#include "qvs/parallel.hpp"

#include <atomic>

namespace qvs {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel_kernels(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

bool parallel_kernels() { return g_parallel.load(std::memory_order_relaxed); }

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace qvs
