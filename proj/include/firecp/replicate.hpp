// Replicate dispatch: run f(replicate_index) for each replicate on a small
// worker pool. The replicate->seed map is fixed by stream_seed(), so results
// are identical for any worker count; callers store per-replicate outcomes
// by index and merge afterwards.

#ifndef FIRECP_REPLICATE_HPP
#define FIRECP_REPLICATE_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace firecp {

inline int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class F>
void parallel_replicates(std::int64_t replicates, int workers, F&& f) {
  if (workers <= 1 || replicates <= 1) {
    for (std::int64_t r = 0; r < replicates; ++r) f(r);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::int64_t r = next.fetch_add(1);
        if (r >= replicates) return;
        try {
          f(r);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace firecp

#endif  // FIRECP_REPLICATE_HPP
