#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace peerline {

// PEERLINE_THREADS caps the worker count; default is the hardware concurrency.
inline unsigned worker_count()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PEERLINE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1)
            return static_cast<unsigned>(std::min<long>(v, 1024));
    }
    return hw;
}

// Runs fn(i) for i in [0, count). Work is split into contiguous chunks; callers write
// results into per-index slots so the reduction order never depends on scheduling.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn, unsigned workers = 0)
{
    if (workers == 0)
        workers = worker_count();
    workers = static_cast<unsigned>(std::min<size_t>(workers, count));
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    const size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (size_t i = lo; i < hi; ++i)
                    fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(mu);
                if (!err)
                    err = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

} // namespace peerline
