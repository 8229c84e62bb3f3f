#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ulc {

// Runs fn(i) for i in [0, n) on `threads` workers. Callers preallocate result
// slots indexed by i and merge in index order, so outputs are identical for
// any worker count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int nw = threads < static_cast<int>(n) ? threads : static_cast<int>(n);
    pool.reserve(nw);
    for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace ulc
