#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tgs/graph.hpp"
#include "tgs/rng.hpp"

namespace tgs {

enum class Neighborhood : std::uint8_t { N1, N2, Any };

enum class MoveKind : std::uint8_t { ShiftPair, Split, Merge };

// Edge-count preserving rewrite of a creation sequence. All referenced
// positions lie in the mutable range [1, n-2].
//
//  ShiftPair: a = position with pattern (0,1) at (a,a+1), rewritten to
//             (1,0) (one edge less); b = position with pattern (1,0) at
//             (b,b+1), rewritten to (0,1) (one edge more). The two
//             windows must not overlap.
//  Split:     bit a=1 removed, bits b and c set (b < c, b + c == a).
//  Merge:     bits b and c removed (b < c), bit a == b + c set.
struct Move {
    MoveKind kind;
    int a = -1;
    int b = -1;
    int c = -1;

    friend bool operator==(const Move&, const Move&) = default;
};

bool is_applicable(const CreationSequence& seq, const Move& mv);

// Throws std::invalid_argument if the move's preconditions fail.
CreationSequence apply_move(const CreationSequence& seq, const Move& mv);

// N1 = all applicable ShiftPair moves, ascending (b, a): the site that
// gains the edge leads the order, which lets first-improvement search
// walk mass towards the head instead of stalling on tail shuffles.
// N2 = all applicable Splits ascending (a, b), then Merges ascending (a, b).
// Any = N1 followed by N2. The fixed order makes first-improvement
// local search deterministic.
std::vector<Move> enumerate_neighborhood(const CreationSequence& seq, Neighborhood which);

// Uniformly random applicable move from the requested neighborhood
// (Any = uniform over the union), or nullopt if it is empty.
std::optional<Move> random_move(const CreationSequence& seq, Neighborhood which,
                                RandomStream& rng);

}  // namespace tgs
