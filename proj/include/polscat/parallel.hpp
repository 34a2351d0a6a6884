/**
 * @file parallel.hpp
 * @brief Deterministic index-space parallel loop.
 *
 * Monte Carlo drivers in this library parallelize over an index range where
 * iteration i writes only slot i of a preallocated output buffer and draws
 * only from a substream derived from (seed, i).  Under that contract the
 * result is bitwise identical for any worker count, so parallelism is purely
 * a throughput knob.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace polscat {

// Clamp a requested worker count to something sane; 0 means "ask the
// hardware".
inline unsigned effective_threads(unsigned requested) {
    if (requested == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        requested = hw ? hw : 1;
    }
    return std::min(requested, 256u);
}

/**
 * Run fn(i) for every i in [0, n), split into contiguous blocks across
 * `threads` workers.  fn must not throw and must touch only per-index data;
 * block boundaries carry no semantic meaning.
 */
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = effective_threads(threads ? threads : 1);
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace polscat
