#include "drpa/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace drpa {

ThreadPool::ThreadPool(int workers) : workers_(std::max(1, workers)) {
    threads_.reserve(workers_ - 1);
    for (int i = 0; i < workers_ - 1; ++i) {
        threads_.emplace_back([this] { worker_loop(); });
    }
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        stop_ = true;
    }
    cv_work_.notify_all();
    for (std::thread& t : threads_) t.join();
}

void ThreadPool::worker_loop() {
    std::uint64_t seen = 0;
    std::unique_lock<std::mutex> lock(mutex_);
    for (;;) {
        cv_work_.wait(lock, [&] { return stop_ || generation_ != seen; });
        if (stop_) return;
        seen = generation_;
        lock.unlock();
        run_chunks();
        lock.lock();
    }
}

void ThreadPool::run_chunks() {
    for (;;) {
        int chunk;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (next_chunk_ >= chunk_count_) return;
            chunk = next_chunk_++;
        }
        const std::int64_t begin = n_ * chunk / chunk_count_;
        const std::int64_t end = n_ * (chunk + 1) / chunk_count_;
        if (begin < end) (*body_)(begin, end);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (++done_chunks_ == chunk_count_) cv_done_.notify_all();
        }
    }
}

void ThreadPool::parallel_for(
    std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body) {
    if (n <= 0) return;
    if (workers_ == 1 || n == 1) {
        body(0, n);
        return;
    }
    {
        std::lock_guard<std::mutex> lock(mutex_);
        body_ = &body;
        n_ = n;
        chunk_count_ = static_cast<int>(std::min<std::int64_t>(workers_, n));
        next_chunk_ = 0;
        done_chunks_ = 0;
        ++generation_;
    }
    cv_work_.notify_all();
    run_chunks();
    std::unique_lock<std::mutex> lock(mutex_);
    cv_done_.wait(lock, [&] { return done_chunks_ == chunk_count_; });
    body_ = nullptr;
}

int default_worker_count() {
    if (const char* env = std::getenv("DRPA_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

}  // namespace drpa
