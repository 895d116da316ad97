#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lb {

// Worker count for pure per-item loops. LG_THREADS caps it; unset means use
// the hardware count. Training never goes through here (it is sequential by
// contract), only side-effect-free per-image work that writes to disjoint
// slots, so the schedule cannot change results.
inline int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("LG_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    int workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    workers = static_cast<int>(std::min<std::size_t>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace lb
