#pragma once

// A small persistent worker pool. Work is handed out as half-open index
// chunks through an atomic cursor, so load balances dynamically; callers
// guarantee disjoint writes per index, which keeps every run deterministic
// regardless of the worker count.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace skycell {

class ThreadPool {
 public:
  // workers == 0 picks std::thread::hardware_concurrency().
  explicit ThreadPool(unsigned workers = 0);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  unsigned workers() const { return workers_; }

  // Runs body(begin, end) over disjoint chunks of [0, count) and blocks
  // until every chunk finished. The calling thread participates.
  void parallel_for(std::size_t count, std::size_t grain,
                    const std::function<void(std::size_t, std::size_t)>& body);

 private:
  void worker_loop();
  void run_chunks(const std::function<void(std::size_t, std::size_t)>& body, std::size_t count,
                  std::size_t grain);

  unsigned workers_;
  std::vector<std::thread> threads_;

  std::mutex mu_;
  std::condition_variable wake_cv_;
  std::condition_variable done_cv_;
  bool stop_ = false;
  uint64_t epoch_ = 0;
  unsigned inflight_ = 0;

  const std::function<void(std::size_t, std::size_t)>* body_ = nullptr;
  std::size_t count_ = 0;
  std::size_t grain_ = 1;
  std::atomic<std::size_t> cursor_{0};
};

// Block merge sort on the pool; with a strict total order the result is
// identical for every worker count.
template <typename T, typename Less>
void parallel_sort(std::vector<T>& v, ThreadPool& pool, Less less) {
  const std::size_t n = v.size();
  if (pool.workers() <= 1 || n < (1u << 15)) {
    std::sort(v.begin(), v.end(), less);
    return;
  }
  const std::size_t blocks = pool.workers();
  const std::size_t block_size = (n + blocks - 1) / blocks;
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t b = 0; b * block_size < n; ++b)
    runs.emplace_back(b * block_size, std::min(n, (b + 1) * block_size));
  pool.parallel_for(runs.size(), 1, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t r = lo; r < hi; ++r)
      std::sort(v.begin() + runs[r].first, v.begin() + runs[r].second, less);
  });
  while (runs.size() > 1) {
    std::vector<std::pair<std::size_t, std::size_t>> merged;
    for (std::size_t r = 0; r + 1 < runs.size(); r += 2) {
      std::inplace_merge(v.begin() + runs[r].first, v.begin() + runs[r].second,
                         v.begin() + runs[r + 1].second, less);
      merged.emplace_back(runs[r].first, runs[r + 1].second);
    }
    if (runs.size() % 2) merged.push_back(runs.back());
    runs.swap(merged);
  }
}

}  // namespace skycell
