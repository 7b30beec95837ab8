#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hardylab {

/// Worker count for `requested`; 0 means hardware concurrency.
inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(xs[i]), split into contiguous chunks over `workers` threads.
/// Output order never depends on scheduling. The first exception thrown by
/// any worker is rethrown on the calling thread.
template <typename Fn>
std::vector<double> parallel_map(const std::vector<double>& xs, Fn&& fn, unsigned workers = 1) {
    std::vector<double> out(xs.size());
    const unsigned w = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(1, xs.size())));
    if (w <= 1) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = fn(xs[i]);
        return out;
    }
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> pool;
    pool.reserve(w);
    const std::size_t chunk = (xs.size() + w - 1) / w;
    for (unsigned k = 0; k < w; ++k) {
        pool.emplace_back([&, k] {
            const std::size_t begin = k * chunk;
            const std::size_t end = std::min(xs.size(), begin + chunk);
            try {
                for (std::size_t i = begin; i < end; ++i) out[i] = fn(xs[i]);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

}  // namespace hardylab
