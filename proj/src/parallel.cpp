#include "huakit/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace huakit {

namespace {
std::atomic<int> g_workers{0};  // 0 = library default (all hardware threads)
}

int workers() {
  const int w = g_workers.load(std::memory_order_relaxed);
  if (w > 0) return w;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_workers(int n) {
  if (n < 1) n = 1;
  g_workers.store(n, std::memory_order_relaxed);
}

}  // namespace huakit
