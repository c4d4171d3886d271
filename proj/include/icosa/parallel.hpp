#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace icosa {

/// Runs fn(i) for i in [0, n).  Each index is handled exactly once; callers
/// write only to slot i, so results do not depend on the thread count.
template <class Fn>
void parallelFor(std::size_t n, int threads, Fn&& fn) {
  threads = std::max(1, threads);
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  constexpr std::size_t chunk = 64;
  auto worker = [&] {
    for (;;) {
      const std::size_t start = next.fetch_add(chunk);
      if (start >= n) return;
      const std::size_t stop = std::min(n, start + chunk);
      for (std::size_t i = start; i < stop; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

/// Thread count from ICOSA_THREADS, else the hardware concurrency.
int defaultThreads();

}  // namespace icosa
