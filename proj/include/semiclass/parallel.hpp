#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

#include "semiclass/types.hpp"

namespace semiclass {

/// Worker count: SEMICLASS_THREADS when set, otherwise machine parallelism.
inline int thread_count() {
  if (const char* env = std::getenv("SEMICLASS_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

/// Runs body(i) for i in [0, n). Iterations must write disjoint state;
/// the schedule is static so results never depend on thread timing.
template <class Body>
void parallel_for(Index n, Body&& body) {
  const int workers = std::min<Index>(thread_count(), n) > 0
                          ? int(std::min<Index>(thread_count(), n))
                          : 1;
  if (workers <= 1 || n < 4) {
    for (Index i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (Index i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace semiclass
