#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace persalg {

// Thread cap taken from PERSALG_THREADS (default: hardware concurrency).
inline unsigned thread_limit() {
    static unsigned cached = [] {
        unsigned hw = std::thread::hardware_concurrency();
        if (hw == 0) hw = 1;
        if (const char* env = std::getenv("PERSALG_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return std::min<unsigned>(hw * 4, static_cast<unsigned>(v));
        }
        return hw;
    }();
    return cached;
}

// Runs fn(i) for i in [0, n). Each index writes only its own output slot,
// so results are deterministic regardless of the thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned nthreads = std::min<std::size_t>(thread_limit(), n);
    if (nthreads <= 1 || n < 16) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) break;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace persalg
