#pragma once

#include <cstdint>

namespace tgs {

// Deterministic 64-bit generator (splitmix64). The recurrence, the
// rejection scheme for bounded integers and the 53-bit real mapping are
// part of the output contract so that independent implementations can
// replay experiment traces bit for bit.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, k), k >= 1: draw 64-bit words, rejecting the short
    // remainder band so the modulus is unbiased.
    std::uint64_t below(std::uint64_t k) {
        const std::uint64_t threshold = (0 - k) % k;  // 2^64 mod k
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % k;
        }
    }

    // Uniform integer in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform in [0,1): top 53 bits scaled by 2^-53.
    double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace tgs
