#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace fundreg {

/// Worker count: FUNDREG_THREADS when set (>= 1), otherwise the hardware count.
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FUNDREG_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return std::min(static_cast<unsigned>(n), hw);
    } catch (...) {
    }
  }
  return hw;
}

/// Calls body(i) for i in [0, n) over contiguous chunks. Callers write results
/// into per-index slots, so output never depends on scheduling.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const unsigned workers = std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
  if (workers <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    const std::size_t begin = t * chunk, end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
}

}  // namespace fundreg
