#include "skycell/parallel.hpp"

#include <algorithm>

namespace skycell {

ThreadPool::ThreadPool(unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers_ = workers;
  threads_.reserve(workers_ > 0 ? workers_ - 1 : 0);
  for (unsigned t = 1; t < workers_; ++t) threads_.emplace_back([this] { worker_loop(); });
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
  }
  wake_cv_.notify_all();
  for (auto& t : threads_) t.join();
}

void ThreadPool::run_chunks(const std::function<void(std::size_t, std::size_t)>& body,
                            std::size_t count, std::size_t grain) {
  for (;;) {
    const std::size_t begin = cursor_.fetch_add(grain, std::memory_order_relaxed);
    if (begin >= count) return;
    body(begin, std::min(count, begin + grain));
  }
}

void ThreadPool::worker_loop() {
  uint64_t seen = 0;
  for (;;) {
    std::unique_lock<std::mutex> lock(mu_);
    wake_cv_.wait(lock, [&] { return stop_ || epoch_ != seen; });
    if (stop_) return;
    seen = epoch_;
    if (body_ == nullptr) continue;  // job finished before this thread woke
    const auto* body = body_;
    const std::size_t count = count_;
    const std::size_t grain = grain_;
    ++inflight_;
    lock.unlock();

    run_chunks(*body, count, grain);

    lock.lock();
    if (--inflight_ == 0) done_cv_.notify_all();
  }
}

void ThreadPool::parallel_for(std::size_t count, std::size_t grain,
                              const std::function<void(std::size_t, std::size_t)>& body) {
  if (count == 0) return;
  if (grain == 0) grain = 1;
  if (workers_ == 1 || count <= grain) {
    body(0, count);
    return;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    body_ = &body;
    count_ = count;
    grain_ = grain;
    cursor_.store(0, std::memory_order_relaxed);
    ++epoch_;
  }
  wake_cv_.notify_all();
  run_chunks(body, count, grain);
  {
    std::unique_lock<std::mutex> lock(mu_);
    done_cv_.wait(lock, [&] { return inflight_ == 0; });
    body_ = nullptr;
  }
}

}  // namespace skycell
