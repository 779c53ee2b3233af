#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace znt {

// Runs fn(i) for i in [0, n) on up to `threads` workers and returns the
// results indexed by i.  Work units are fixed by the input, never by the
// thread count, so the result vector is identical for any parallelism degree.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn,
                            unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<T> out(n);
    if (threads == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned k = std::min<std::size_t>(threads, n);
    pool.reserve(k);
    for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

} // namespace znt
