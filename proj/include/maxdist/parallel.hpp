#pragma once

// Deterministic work partitioning: body(i) must write only to slot i, so the
// result is independent of the thread count and schedule.

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace maxdist {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
  threads = resolve_threads(threads);
  if (count == 0) return;
  if (threads <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  const int spawned = static_cast<int>(std::min<std::size_t>(threads, count));
  pool.reserve(spawned - 1);
  for (int t = 1; t < spawned; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace maxdist
