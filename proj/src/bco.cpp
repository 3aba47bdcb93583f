#include "tgs/bco.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "tgs/construct.hpp"
#include "tgs/moves.hpp"

namespace tgs {
namespace {

// Top-two distinct best-so-far solutions, for the elitist restart.
class EliteArchive {
public:
    void offer(const CreationSequence& seq, double value) {
        for (const Entry& e : entries_)
            if (e.seq == seq) return;
        entries_.push_back({seq, value});
        std::stable_sort(entries_.begin(), entries_.end(),
                         [](const Entry& a, const Entry& b) { return a.value > b.value; });
        if (entries_.size() > 2) entries_.pop_back();
    }

    std::size_t size() const { return entries_.size(); }
    const CreationSequence& sequence(std::size_t i) const { return entries_[i].seq; }

private:
    struct Entry {
        CreationSequence seq;
        double value;
    };
    std::vector<Entry> entries_;
};

}  // namespace

std::vector<double> normalize_values(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("normalize: empty population");
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    std::vector<double> out(values.size(), 1.0);
    if (*mx == *mn) return out;  // flat population: everyone counts as best
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - *mn) / (*mx - *mn);
    return out;
}

bool loyalty_decision(double normalized, RandomStream& rng) {
    return rng.real01() < normalized;
}

int roulette_pick(const std::vector<double>& weights, RandomStream& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) return static_cast<int>(rng.below(weights.size()));
    const double spin = rng.real01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (spin < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size() - 1);
}

void recruit(std::vector<BeeState>& bees, RandomStream& rng) {
    std::vector<int> recruiters;
    std::vector<double> weights;
    for (std::size_t b = 0; b < bees.size(); ++b) {
        if (bees[b].loyal) {
            recruiters.push_back(static_cast<int>(b));
            weights.push_back(bees[b].normalized);
        }
    }
    if (recruiters.empty()) return;  // nobody advertises: all keep their solutions
    for (std::size_t b = 0; b < bees.size(); ++b) {
        if (bees[b].loyal) continue;
        const std::size_t r = static_cast<std::size_t>(
            recruiters[static_cast<std::size_t>(roulette_pick(weights, rng))]);
        bees[b].solution = bees[r].solution;
        bees[b].value = bees[r].value;
    }
}

RunResult bco_run(const ProblemInstance& inst, const BcoConfig& cfg) {
    // B = 1 degenerates to a blind random walk; still well-defined.
    if (cfg.bees < 1) throw std::invalid_argument("bco: need at least 1 bee");
    if (cfg.passes < 1) throw std::invalid_argument("bco: need at least 1 pass");

    Evaluator eval(inst, cfg.budget);
    RandomStream rng(cfg.seed);
    EliteArchive elites;

    const int transform_lo = std::max(1, inst.n / 3);
    const int transform_hi = std::max(transform_lo, 2 * inst.n / 3);

    bool first_iteration = true;
    while (!eval.exhausted()) {
        std::vector<BeeState> bees;
        bees.reserve(static_cast<std::size_t>(cfg.bees));
        for (int b = 0; b < cfg.bees; ++b) {
            CreationSequence sol =
                (!first_iteration && cfg.elitist_restart &&
                 static_cast<std::size_t>(b) < elites.size())
                    ? elites.sequence(static_cast<std::size_t>(b))
                    : random_feasible(inst, rng);
            const std::optional<double> v = eval.evaluate(sol);
            if (!v) break;
            elites.offer(sol, *v);
            bees.push_back({std::move(sol), *v, 0.0, false});
        }
        first_iteration = false;
        if (bees.size() < static_cast<std::size_t>(cfg.bees)) break;  // budget died mid-init

        for (int u = 0; u < cfg.passes && !eval.exhausted(); ++u) {
            // Backward pass: normalization, loyalty, recruitment.
            std::vector<double> values(bees.size());
            for (std::size_t b = 0; b < bees.size(); ++b) values[b] = bees[b].value;
            const std::vector<double> norms = normalize_values(values);
            for (std::size_t b = 0; b < bees.size(); ++b) {
                bees[b].normalized = norms[b];
                bees[b].loyal = loyalty_decision(norms[b], rng);
            }
            recruit(bees, rng);

            // Forward pass: every bee wanders o moves and keeps the result;
            // the evaluator tracks the global best, so nothing is lost when
            // a walk ends on a worse solution.
            for (std::size_t b = 0; b < bees.size(); ++b) {
                const long long o = rng.range(transform_lo, transform_hi);
                CreationSequence sol = bees[b].solution;
                for (long long step = 0; step < o; ++step) {
                    const std::optional<Move> mv = random_move(sol, Neighborhood::Any, rng);
                    if (!mv) break;
                    sol = apply_move(sol, *mv);
                }
                assert(sol.edge_count() == inst.m);
                const std::optional<double> v = eval.evaluate(sol);
                if (!v) break;
                elites.offer(sol, *v);
                bees[b] = {std::move(sol), *v, 0.0, false};
            }
        }
    }
    return eval.result();
}

}  // namespace tgs
