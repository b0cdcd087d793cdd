#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace transclust {

/// Number of workers to use when the caller passes 0.
inline unsigned default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [begin, end) on up to `threads` workers using static
/// contiguous blocks. Each index is processed by exactly one worker, so the
/// result is identical to the sequential loop as long as fn(i) only writes
/// state owned by index i.
template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned threads, Fn&& fn) {
    if (end <= begin) return;
    std::size_t count = end - begin;
    unsigned workers = threads == 0 ? default_threads() : threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = begin + w * chunk;
        std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace transclust
