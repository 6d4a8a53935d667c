#pragma once

// Minimal block-parallel helper. Work is split into independent blocks whose
// results merge associatively; the merge runs in block order so outputs do
// not depend on scheduling. Thread count comes from QTSYM_THREADS (default:
// hardware concurrency).

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qtsym {

inline int thread_count() {
    if (const char* env = std::getenv("QTSYM_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs worker(block) for block = 0..nblocks-1, possibly in parallel, then
/// merge(block) sequentially in increasing block order.
inline void parallel_blocks(int nblocks, const std::function<void(int)>& worker,
                            const std::function<void(int)>& merge) {
    const int threads = std::min(thread_count(), nblocks);
    if (threads <= 1) {
        for (int b = 0; b < nblocks; ++b) {
            worker(b);
            merge(b);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            while (true) {
                int b = next.fetch_add(1);
                if (b >= nblocks) break;
                worker(b);
            }
        });
    for (auto& th : pool) th.join();
    for (int b = 0; b < nblocks; ++b) merge(b);
}

}  // namespace qtsym
