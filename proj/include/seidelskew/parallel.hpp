#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace seidelskew::detail {

inline constexpr std::uint64_t kChunkSize = 1u << 16;

/// Splits [begin, end) into fixed-size chunks, runs `fn(chunk_begin, chunk_end)`
/// on each, and returns the per-chunk results ordered by chunk index. Workers
/// pull chunks from an atomic counter, so the output never depends on thread
/// scheduling; `workers <= 1` runs inline. The first exception thrown by `fn`
/// is rethrown on the calling thread after the pool drains.
template <class R, class Fn>
std::vector<R> map_chunks(std::uint64_t begin, std::uint64_t end, int workers, Fn fn,
                          std::uint64_t chunk_size = kChunkSize) {
    const std::uint64_t span = end > begin ? end - begin : 0;
    const std::uint64_t n_chunks = span == 0 ? 0 : (span + chunk_size - 1) / chunk_size;
    std::vector<R> results(n_chunks);

    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t lo = begin + c * chunk_size;
        const std::uint64_t hi = lo + chunk_size < end && lo + chunk_size > lo ? lo + chunk_size : end;
        results[c] = fn(lo, hi);
    };

    if (workers <= 1 || n_chunks <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) run_chunk(c);
        return results;
    }

    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= n_chunks || failed.load()) return;
            try {
                run_chunk(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::uint64_t n_threads = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), n_chunks);
    pool.reserve(n_threads);
    for (std::uint64_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

}  // namespace seidelskew::detail
