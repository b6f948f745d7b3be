#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "rat.hpp"

namespace hyperdelta {

// worker cap from HYPERDELTA_THREADS; 0 or unset means sequential
inline int worker_count() {
    const char* env = std::getenv("HYPERDELTA_THREADS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v < 0 ? 0 : v;
}

// run f(i) for i in [0, count); results land at their index so the caller's
// merge order stays canonical regardless of scheduling
template <class R>
std::vector<R> parallel_map(int count, const std::function<R(int)>& f) {
    std::vector<R> results(static_cast<size_t>(count));
    const int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) results[static_cast<size_t>(i)] = f(i);
        return results;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    results[static_cast<size_t>(i)] = f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return results;
}

}  // namespace hyperdelta
