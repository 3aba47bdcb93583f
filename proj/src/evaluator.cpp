#include "tgs/evaluator.hpp"

#include <stdexcept>

namespace tgs {

Evaluator::Evaluator(const ProblemInstance& inst, long long budget, int quotient_threshold)
    : n_(inst.n), budget_(budget), quotient_threshold_(quotient_threshold) {
    if (budget < 1) throw std::invalid_argument("evaluator: budget must be >= 1");
}

std::optional<double> Evaluator::evaluate(const CreationSequence& seq) {
    if (used_ >= budget_) return std::nullopt;
    ++used_;
    const double value = n_ > quotient_threshold_ ? spectral_radius_quotient(seq)
                                                  : spectral_radius(seq).lambda1;
    if (!best_ || value > best_value_) {
        best_ = seq;
        best_value_ = value;
        trace_.push_back({used_, value});
    }
    return value;
}

RunResult Evaluator::result() const {
    if (!best_) throw std::logic_error("evaluator: no evaluation recorded");
    return RunResult{*best_, best_value_, used_, trace_};
}

}  // namespace tgs
