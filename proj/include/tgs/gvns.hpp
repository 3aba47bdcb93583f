#pragma once

#include <cstdint>
#include <optional>

#include "tgs/evaluator.hpp"
#include "tgs/graph.hpp"
#include "tgs/moves.hpp"
#include "tgs/rng.hpp"

namespace tgs {

enum class ShakeMode : std::uint8_t {
    N2Only,      // baseline: every shake move drawn from N2
    CoinFlip5050 // tuned: fair coin between N1 and N2 per move
};

enum class LsStrategy : std::uint8_t { BestImprovement, FirstImprovement };

struct GvnsConfig {
    int k_max = 0;  // 0 = default n/2 (at least 1)
    ShakeMode shake = ShakeMode::N2Only;
    LsStrategy ls = LsStrategy::BestImprovement;
    long long budget = 1000;
    std::uint64_t seed = 0;
};

// Applies up to k random moves; stops early when the chosen neighborhood
// has no applicable move, so the realized distance may be below k.
CreationSequence shake(const CreationSequence& seq, int k, const GvnsConfig& cfg,
                       RandomStream& rng);

struct VndResult {
    CreationSequence seq;
    std::optional<double> value;  // nullopt if the budget died before the entry evaluation
};

// Variable neighborhood descent over N1 then N2: local search in the
// current neighborhood, restart at N1 after any improvement, finish when
// both are improvement-free or the budget runs out (then the best
// solution reached so far comes back immediately).
VndResult vnd(const CreationSequence& start, const GvnsConfig& cfg, Evaluator& eval);

// General VNS: x_best <- init2_sol, then repeat { k <- 1; repeat
// { shake k moves, VND, move or advance k } until k > k_max } until the
// evaluation budget is exhausted. Objective is maximized.
RunResult gvns_run(const ProblemInstance& inst, const GvnsConfig& cfg);

}  // namespace tgs
