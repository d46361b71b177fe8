/**
 * @file parallel.hpp
 * @brief Chunked parallel loop over std::thread.
 */
#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace nonholo {

inline int worker_count() {
    if (const char* env = std::getenv("NONHOLO_NUM_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count); fn must be safe to call concurrently.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int begin = w * chunk;
        int end = std::min(begin + chunk, count);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] {
            for (int i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace nonholo
