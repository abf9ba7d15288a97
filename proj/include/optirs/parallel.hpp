// SPDX-License-Identifier: Apache-2.0
//
// Static-partition parallel loop.  Each index writes its own slot, so any
// reduction done afterwards runs in index order and results do not depend
// on the thread count.

#ifndef OPTIRS_PARALLEL_HPP
#define OPTIRS_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace optirs {

inline unsigned hardware_threads() {
    if (const char* env = std::getenv("OPTIRS_THREADS")) {
        const long n = std::atol(env);
        if (n > 0) return unsigned(n);
    }
    const unsigned n = std::thread::hardware_concurrency();
    return n > 0 ? n : 1;
}

template <typename Fn>
inline void parallel_for(std::size_t n, Fn&& fn, unsigned threads = 0) {
    if (threads == 0) threads = hardware_threads();
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    threads = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace optirs

#endif
