#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace mldlab {

/// Maps fn over [0, n) on up to `jobs` threads and returns the results in
/// index order, so output is identical for any worker count.
template <class F>
auto parallel_map_ordered(size_t n, int jobs, F&& fn)
    -> std::vector<decltype(fn(size_t{0}))> {
    using R = decltype(fn(size_t{0}));
    std::vector<R> results(n);
    if (n == 0)
        return results;
    size_t workers = std::max(1, jobs);
    workers = std::min(workers, n);
    if (workers == 1) {
        for (size_t i = 0; i < n; ++i)
            results[i] = fn(i);
        return results;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n)
                    return;
                results[i] = fn(i);
            }
        });
    }
    for (auto& th : pool)
        th.join();
    return results;
}

} // namespace mldlab
