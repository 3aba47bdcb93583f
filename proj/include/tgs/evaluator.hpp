#pragma once

#include <optional>
#include <vector>

#include "tgs/graph.hpp"
#include "tgs/spectral.hpp"

namespace tgs {

struct TracePoint {
    long long evaluation;  // 1-based index of the evaluation that improved
    double value;
};

struct RunResult {
    CreationSequence best_sequence;
    double best_value = 0.0;
    long long evaluations_used = 0;
    std::vector<TracePoint> improvement_trace;
};

// Objective function with budget accounting. Every evaluate() call is
// exactly one budget unit, mirroring the cost model where the spectrum
// computation dominates. The evaluator also remembers the best sequence
// seen so a solver cannot lose an improvement it already paid for.
//
// Full-matrix power iteration is used up to quotient_threshold vertices,
// the block-quotient route beyond that.
class Evaluator {
public:
    Evaluator(const ProblemInstance& inst, long long budget, int quotient_threshold = 64);

    // nullopt once the budget is exhausted; the call does not count.
    std::optional<double> evaluate(const CreationSequence& seq);

    bool exhausted() const { return used_ >= budget_; }
    long long used() const { return used_; }
    long long budget() const { return budget_; }

    bool has_best() const { return best_.has_value(); }
    const CreationSequence& best_sequence() const { return *best_; }
    double best_value() const { return best_value_; }
    const std::vector<TracePoint>& trace() const { return trace_; }

    RunResult result() const;  // requires at least one evaluation

private:
    int n_;
    long long budget_;
    long long used_ = 0;
    int quotient_threshold_;
    std::optional<CreationSequence> best_;
    double best_value_ = 0.0;
    std::vector<TracePoint> trace_;
};

}  // namespace tgs
