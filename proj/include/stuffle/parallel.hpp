#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace stuffle {

/// Worker count for data-parallel sweeps: STUFFLE_THREADS when set, else the
/// hardware concurrency, clamped to [1, 16].
inline unsigned worker_count() {
  if (const char* env = std::getenv("STUFFLE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 16));
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 16u);
}

/// Runs fn(i) for i in [0, n) on worker_count() threads, striding indices.
/// Callers keep determinism by writing into index-addressed slots.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace stuffle
