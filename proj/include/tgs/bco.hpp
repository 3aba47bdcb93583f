#pragma once

#include <cstdint>
#include <vector>

#include "tgs/evaluator.hpp"
#include "tgs/graph.hpp"
#include "tgs/rng.hpp"

namespace tgs {

struct BcoConfig {
    int bees = 5;    // B
    int passes = 10; // NC, forward/backward passes per iteration
    long long budget = 1000;
    std::uint64_t seed = 0;
    // Tuned variant: every iteration after the first starts from the two
    // best-so-far distinct solutions plus bees-2 fresh random ones.
    bool elitist_restart = false;
};

struct BeeState {
    CreationSequence solution;
    double value = 0.0;
    double normalized = 0.0;  // O_b in [0,1]
    bool loyal = false;
};

// O_b = (C_b - C_min) / (C_max - C_min); a flat population maps to all
// ones (everyone loyal, recruitment skipped for that pass).
std::vector<double> normalize_values(const std::vector<double>& values);

// Loyal iff a uniform draw from [0,1) is below the normalized value.
bool loyalty_decision(double normalized, RandomStream& rng);

// Roulette-wheel index over non-negative weights; uniform if all zero.
int roulette_pick(const std::vector<double>& weights, RandomStream& rng);

// Backward-pass exchange: every non-loyal bee adopts the solution of a
// recruiter drawn by roulette over normalized values. With no recruiters
// every bee keeps its own solution.
void recruit(std::vector<BeeState>& bees, RandomStream& rng);

// Improvement-based bee colony search. Each forward pass transforms every
// bee with o random moves (o uniform in [n/3, 2n/3]) and evaluates the
// transformed solution once; the bee keeps it unconditionally, selection
// pressure comes from the loyalty/recruitment exchange, and the global
// best is updated from every evaluation.
RunResult bco_run(const ProblemInstance& inst, const BcoConfig& cfg);

}  // namespace tgs
