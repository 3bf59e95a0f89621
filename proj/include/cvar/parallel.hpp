#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cvar {

// Runs fn(i) for i in [0, n). Each index must be independent of the others
// (bootstrap replicates with per-replicate RNGs), so the result does not
// depend on the schedule. threads == 0 picks the hardware count.
template <typename Fn>
void parallel_for(int n, Fn&& fn, unsigned threads = 0) {
    if (n <= 0) return;
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace cvar
