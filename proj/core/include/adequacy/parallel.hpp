// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace adequacy {

/// Kahan compensated accumulator. Sums of ~1e8 small terms must not drift.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    [[nodiscard]] double value() const { return sum; }
};

/// Runs work(0..n_chunks-1), distributing chunks over at most `threads`
/// workers. Chunk boundaries are caller-fixed, so results that are combined
/// in chunk order are identical for every thread count. threads <= 1 runs
/// inline.
void parallel_chunks(std::size_t n_chunks, int threads,
                     const std::function<void(std::size_t)>& work);

/// Resolves a --threads style request: 0 means hardware concurrency.
int resolve_threads(int requested);

} // namespace adequacy
