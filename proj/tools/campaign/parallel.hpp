#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zfx::campaign {

// results[i] = f(items[i]) computed on `jobs` threads. The first exception thrown by any
// worker is rethrown on the calling thread after all workers stop.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F&& f) {
    using R = decltype(f(items.front()));
    std::vector<R> results(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size() || failed.load()) return;
            try {
                results[i] = f(items[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };

    const int threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(items.size(), 1)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace zfx::campaign
