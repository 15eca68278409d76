#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace drpa {

// Fixed-size worker pool for data-parallel loops. Work is split into
// contiguous index chunks; the partition depends only on (n, worker count),
// never on scheduling, so callers with disjoint writes stay deterministic.
// parallel_for is not reentrant.
class ThreadPool {
public:
    explicit ThreadPool(int workers);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    int worker_count() const { return workers_; }

    // Runs body(begin, end) over a partition of [0, n); blocks until done.
    void parallel_for(std::int64_t n,
                      const std::function<void(std::int64_t, std::int64_t)>& body);

private:
    void worker_loop();
    void run_chunks();

    int workers_ = 1;
    std::vector<std::thread> threads_;

    std::mutex mutex_;
    std::condition_variable cv_work_;
    std::condition_variable cv_done_;
    std::uint64_t generation_ = 0;
    bool stop_ = false;

    const std::function<void(std::int64_t, std::int64_t)>* body_ = nullptr;
    std::int64_t n_ = 0;
    int chunk_count_ = 0;
    int next_chunk_ = 0;
    int done_chunks_ = 0;
};

// DRPA_THREADS environment override, else hardware concurrency, else 1.
int default_worker_count();

}  // namespace drpa
