#include "tgs/moves.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tgs {
namespace {

bool in_mutable_range(int p, int n) { return p >= 1 && p <= n - 2; }

}  // namespace

bool is_applicable(const CreationSequence& seq, const Move& mv) {
    const int n = seq.size();
    switch (mv.kind) {
        case MoveKind::ShiftPair: {
            const int a = mv.a, b = mv.b;
            if (!in_mutable_range(a, n) || !in_mutable_range(a + 1, n)) return false;
            if (!in_mutable_range(b, n) || !in_mutable_range(b + 1, n)) return false;
            if (std::abs(a - b) < 2) return false;  // windows must not overlap
            return seq.bit(a) == 0 && seq.bit(a + 1) == 1 && seq.bit(b) == 1 &&
                   seq.bit(b + 1) == 0;
        }
        case MoveKind::Split: {
            const int a = mv.a, b = mv.b, c = mv.c;
            if (!in_mutable_range(a, n) || !in_mutable_range(b, n) || !in_mutable_range(c, n))
                return false;
            if (b >= c || b + c != a) return false;
            return seq.bit(a) == 1 && seq.bit(b) == 0 && seq.bit(c) == 0;
        }
        case MoveKind::Merge: {
            const int a = mv.a, b = mv.b, c = mv.c;
            if (!in_mutable_range(a, n) || !in_mutable_range(b, n) || !in_mutable_range(c, n))
                return false;
            if (b >= c || b + c != a) return false;
            return seq.bit(a) == 0 && seq.bit(b) == 1 && seq.bit(c) == 1;
        }
    }
    return false;
}

CreationSequence apply_move(const CreationSequence& seq, const Move& mv) {
    if (!is_applicable(seq, mv))
        throw std::invalid_argument("apply_move: move preconditions violated");
    std::vector<std::uint8_t> bits = seq.bits();
    switch (mv.kind) {
        case MoveKind::ShiftPair:
            bits[static_cast<std::size_t>(mv.a)] = 1;
            bits[static_cast<std::size_t>(mv.a + 1)] = 0;
            bits[static_cast<std::size_t>(mv.b)] = 0;
            bits[static_cast<std::size_t>(mv.b + 1)] = 1;
            break;
        case MoveKind::Split:
            bits[static_cast<std::size_t>(mv.a)] = 0;
            bits[static_cast<std::size_t>(mv.b)] = 1;
            bits[static_cast<std::size_t>(mv.c)] = 1;
            break;
        case MoveKind::Merge:
            bits[static_cast<std::size_t>(mv.a)] = 1;
            bits[static_cast<std::size_t>(mv.b)] = 0;
            bits[static_cast<std::size_t>(mv.c)] = 0;
            break;
    }
    return CreationSequence(std::move(bits));
}

std::vector<Move> enumerate_neighborhood(const CreationSequence& seq, Neighborhood which) {
    const int n = seq.size();
    std::vector<Move> out;
    if (which == Neighborhood::N1 || which == Neighborhood::Any) {
        // b-major scan: the site receiving the edge leads the tuple order,
        // which walks mass towards the head one slot at a time under
        // first-improvement search
        for (int b = 1; b + 1 <= n - 2; ++b) {
            if (!(seq.bit(b) == 1 && seq.bit(b + 1) == 0)) continue;
            for (int a = 1; a + 1 <= n - 2; ++a) {
                if (std::abs(a - b) < 2) continue;
                if (seq.bit(a) == 0 && seq.bit(a + 1) == 1)
                    out.push_back({MoveKind::ShiftPair, a, b, -1});
            }
        }
    }
    if (which == Neighborhood::N2 || which == Neighborhood::Any) {
        for (int a = 1; a <= n - 2; ++a) {
            if (seq.bit(a) != 1) continue;
            for (int b = std::max(1, a - (n - 2)); 2 * b < a; ++b) {
                const int c = a - b;
                if (c > n - 2) continue;
                if (seq.bit(b) == 0 && seq.bit(c) == 0)
                    out.push_back({MoveKind::Split, a, b, c});
            }
        }
        for (int a = 1; a <= n - 2; ++a) {
            if (seq.bit(a) != 0) continue;
            for (int b = std::max(1, a - (n - 2)); 2 * b < a; ++b) {
                const int c = a - b;
                if (c > n - 2) continue;
                if (seq.bit(b) == 1 && seq.bit(c) == 1)
                    out.push_back({MoveKind::Merge, a, b, c});
            }
        }
    }
    return out;
}

std::optional<Move> random_move(const CreationSequence& seq, Neighborhood which,
                                RandomStream& rng) {
    const std::vector<Move> moves = enumerate_neighborhood(seq, which);
    if (moves.empty()) return std::nullopt;
    return moves[static_cast<std::size_t>(rng.below(moves.size()))];
}

}  // namespace tgs
