#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eqlc::detail {

// Runs fn(task, worker) for every task in [0, n_tasks) on up to `workers`
// threads. Tasks are handed out in order from a shared counter; callers merge
// per-worker results with an order-independent reduction.
template <class Fn>
void run_tasks(std::size_t n_tasks, unsigned workers, Fn&& fn) {
    workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, n_tasks)));
    if (workers <= 1) {
        for (std::size_t t = 0; t < n_tasks; ++t) fn(t, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t t = next++; t < n_tasks; t = next++) fn(t, w);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n_tasks;
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace eqlc::detail
