#include "tgs/construct.hpp"

#include <stdexcept>

#include "tgs/moves.hpp"

namespace tgs {
namespace {

std::vector<std::uint8_t> blank(int n) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    bits.front() = 1;
    bits.back() = 1;
    return bits;
}

}  // namespace

CreationSequence init_sol(const ProblemInstance& inst) {
    const int n = inst.n;
    std::vector<std::uint8_t> bits = blank(n);
    long long e = inst.m - (n - 1);
    for (int p = n - 2; p >= 1 && e > 0; --p) {
        if (p <= e) {
            bits[static_cast<std::size_t>(p)] = 1;
            e -= p;
        }
    }
    return CreationSequence(std::move(bits));
}

CreationSequence init2_sol(const ProblemInstance& inst) {
    const int n = inst.n;
    std::vector<std::uint8_t> bits = blank(n);
    long long e = inst.m - (n - 1);
    for (int p = n - 3; p >= 1 && e > 0; p -= 2) {
        if (p <= e) {
            bits[static_cast<std::size_t>(p)] = 1;
            e -= p;
        }
    }
    for (int p = n - 2; p >= 1 && e > 0; --p) {
        if (p <= e && !bits[static_cast<std::size_t>(p)]) {
            bits[static_cast<std::size_t>(p)] = 1;
            e -= p;
        }
    }
    // Each right-shift of a set bit absorbs exactly one leftover edge.
    while (e > 0) {
        bool shifted = false;
        for (int p = 1; p + 1 <= n - 2; ++p) {
            if (bits[static_cast<std::size_t>(p)] == 1 && bits[static_cast<std::size_t>(p + 1)] == 0) {
                bits[static_cast<std::size_t>(p)] = 0;
                bits[static_cast<std::size_t>(p + 1)] = 1;
                --e;
                shifted = true;
                break;
            }
        }
        if (!shifted)
            throw std::logic_error("init2_sol: repair ran out of shiftable bits (internal error)");
    }
    return CreationSequence(std::move(bits));
}

CreationSequence random_feasible(const ProblemInstance& inst, RandomStream& rng) {
    CreationSequence seq = init2_sol(inst);
    const long long t = rng.range(inst.n, 3LL * inst.n);
    for (long long step = 0; step < t; ++step) {
        const std::optional<Move> mv = random_move(seq, Neighborhood::Any, rng);
        if (!mv) break;
        seq = apply_move(seq, *mv);
    }
    return seq;
}

}  // namespace tgs
