// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <vector>

namespace adequacy {

/// Keyed random stream. A stream's output depends only on (seed, key path),
/// never on draws made from other streams, so independent substreams for
/// e.g. bootstrap replicate r can be derived as RngStream(seed).derive(r)
/// and evaluated in any order or thread.
///
/// The engine is std::mt19937_64 (bit-exact across implementations); bounded
/// integers and uniform doubles are produced here rather than through
/// std::uniform_*_distribution, whose output is implementation-defined.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), path_hash_(0) { reseed(); }

    RngStream(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
        : seed_(seed), path_hash_(0) {
        for (std::uint64_t key : path) path_hash_ = mix(path_hash_ ^ mix(key + 0x9e3779b97f4a7c15ULL));
        reseed();
    }

    /// Child stream identified by (seed, path..., key). Independent of the
    /// parent's position.
    [[nodiscard]] RngStream derive(std::uint64_t key) const {
        RngStream child(*this);
        child.path_hash_ = mix(path_hash_ ^ mix(key + 0x9e3779b97f4a7c15ULL));
        child.reseed();
        return child;
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased uniform integer in [0, n), n >= 1. Rejection sampling.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t umax = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t excess = (umax % n + 1) % n; // 2^64 mod n
        const std::uint64_t limit = umax - excess;
        std::uint64_t x = engine_();
        while (excess != 0 && x > limit) x = engine_();
        return x % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (one value per call, spare cached).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    void reseed() {
        engine_.seed(mix(mix(seed_ + 0x632be59bd9b4e019ULL) ^ path_hash_));
        have_spare_ = false;
    }

    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t path_hash_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace adequacy
