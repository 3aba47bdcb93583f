#pragma once

#include "tgs/graph.hpp"
#include "tgs/rng.hpp"

namespace tgs {

// Tail-greedy constructor: distributes the budget e = m-(n-1) scanning
// positions n-2 down to 1 (largest contributions first), so the ones
// cluster at the tail.
CreationSequence init_sol(const ProblemInstance& inst);

// Alternating constructor: a stride-2 pass starting at position n-3,
// then a stride-1 pass, then a repair loop that shifts set bits one
// step right (each shift absorbs exactly one leftover edge). Produces
// head-alternating sequences that transform more freely than init_sol's.
CreationSequence init2_sol(const ProblemInstance& inst);

// init2_sol followed by t random moves, t uniform in [n, 3n], each move
// uniform over the applicable union of both neighborhoods.
CreationSequence random_feasible(const ProblemInstance& inst, RandomStream& rng);

}  // namespace tgs
