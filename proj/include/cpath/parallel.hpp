#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace cpath {

inline size_t default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(chunk_index, begin, end) over contiguous chunks of [0, count),
/// one chunk per worker. Callers keep per-chunk state and combine it in chunk
/// order, so results do not depend on scheduling.
inline void parallel_chunks(size_t count, size_t num_threads,
                            const std::function<void(size_t, size_t, size_t)>& fn) {
    if (num_threads == 0) num_threads = default_threads();
    if (count == 0) return;
    num_threads = std::min(num_threads, count);
    if (num_threads <= 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(num_threads);
    const size_t base = count / num_threads;
    const size_t extra = count % num_threads;
    size_t begin = 0;
    for (size_t c = 0; c < num_threads; ++c) {
        const size_t len = base + (c < extra ? 1 : 0);
        const size_t end = begin + len;
        workers.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
        begin = end;
    }
    for (auto& worker : workers) worker.join();
}

}  // namespace cpath
