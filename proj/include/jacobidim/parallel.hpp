#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace jacobidim {

// Worker count for embarrassingly parallel loops: JACOBI_DIM_THREADS when
// set (clamped to >= 1), hardware concurrency otherwise.
inline unsigned worker_count() {
    if (const char* env = std::getenv("JACOBI_DIM_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [0, n) across workers.  fn must be safe to call
// concurrently for distinct i; results should be written to preallocated
// slots so output order stays deterministic.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace jacobidim
