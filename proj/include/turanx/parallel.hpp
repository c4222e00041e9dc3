#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace turanx {

// Fork-join map over 0..count-1. Work items must be independent; callers are
// responsible for deterministic merging (e.g. index the results). With
// enabled=false runs inline on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, bool enabled, Fn&& fn) {
  if (!enabled || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  unsigned workers = std::min<std::size_t>(std::thread::hardware_concurrency(), count);
  if (workers < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace turanx
