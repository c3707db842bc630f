#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace besselbounds::cli {

// Worker count from BESSELBOUNDS_THREADS, else the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("BESSELBOUNDS_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Evaluates fn(i) for i in [0, n) on a pool of threads and returns the
// results in index order. The first exception thrown by any call is rethrown
// on the calling thread after all workers stop.
template <class Fn>
auto parallel_map(std::int64_t n, Fn fn) -> std::vector<decltype(fn(std::int64_t{}))> {
    using Result = decltype(fn(std::int64_t{}));
    // vector<bool> packs bits, so neighbouring writes would race.
    static_assert(!std::is_same_v<Result, bool>, "return a wider type than bool");
    std::vector<Result> results(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    if (n <= 0) return results;

    const auto workers =
        static_cast<std::int64_t>(std::min<std::int64_t>(worker_count(), n));
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    constexpr std::int64_t chunk = 64;

    auto body = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::int64_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            const std::int64_t end = std::min(begin + chunk, n);
            try {
                for (std::int64_t i = begin; i < end; ++i) {
                    results[static_cast<std::size_t>(i)] = fn(i);
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
                return;
            }
        }
    };

    if (workers == 1) {
        body();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (std::int64_t w = 0; w < workers; ++w) pool.emplace_back(body);
    }
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace besselbounds::cli
