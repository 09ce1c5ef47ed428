#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace cubeshift {

// Run fn(0..count-1) across hardware threads. Callers hand each index its
// own RNG stream, so results do not depend on the schedule.
template <class Fn>
void parallel_for(long count, Fn&& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (count < static_cast<long>(workers)) workers = static_cast<unsigned>(count);
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const long i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace cubeshift
