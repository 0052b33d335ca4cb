// SPDX-License-Identifier: Apache-2.0
#include "adequacy/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace adequacy {

void parallel_chunks(std::size_t n_chunks, int threads,
                     const std::function<void(std::size_t)>& work) {
    if (n_chunks == 0) return;
    const int n_workers = std::min<std::size_t>(std::max(threads, 1), n_chunks);
    if (n_workers <= 1) {
        for (std::size_t i = 0; i < n_chunks; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n_chunks; i = next.fetch_add(1)) {
                work(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace adequacy
