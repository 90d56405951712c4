#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace krq {

/// Worker count from KRQ_THREADS (default 1, invalid values fall back to 1).
unsigned thread_count_from_env();

/// Splits [first, last] into contiguous chunks and evaluates fn(lo, hi) on up
/// to `threads` workers. Results come back in chunk order, so the output does
/// not depend on the thread count. The first failing chunk's exception is
/// rethrown.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::int64_t first, std::int64_t last, unsigned threads, Fn fn)
{
    if (last < first) return {};
    threads = std::max(1u, threads);
    const std::int64_t total = last - first + 1;
    const std::int64_t chunk_count = std::min<std::int64_t>(total, std::int64_t(threads) * 8);
    const std::int64_t width = (total + chunk_count - 1) / chunk_count;

    std::vector<Result> results(static_cast<std::size_t>(chunk_count));
    std::vector<std::exception_ptr> errors(results.size());
    auto run = [&](std::size_t worker) {
        for (std::size_t c = worker; c < results.size(); c += threads) {
            const std::int64_t lo = first + std::int64_t(c) * width;
            const std::int64_t hi = std::min(last, lo + width - 1);
            try {
                results[c] = fn(lo, hi);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace krq
