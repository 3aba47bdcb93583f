#include "tgs/gvns.hpp"

#include <cassert>

#include "tgs/construct.hpp"

namespace tgs {
namespace {

constexpr double kImproveEps = 1e-9;  // strict-improvement threshold

struct Current {
    CreationSequence seq;
    double value;
};

// Descends within one neighborhood until no strictly improving move is
// left or the budget dies; the returned solution dominates every
// candidate evaluated on the way.
bool local_search(Current& cur, Neighborhood nb, LsStrategy strategy, Evaluator& eval) {
    bool improved_any = false;
    for (;;) {
        bool improved = false;
        const std::vector<Move> moves = enumerate_neighborhood(cur.seq, nb);
        if (strategy == LsStrategy::BestImprovement) {
            CreationSequence best_seq = cur.seq;
            double best_val = cur.value;
            bool exhausted_mid_scan = false;
            for (const Move& mv : moves) {
                CreationSequence cand = apply_move(cur.seq, mv);
                assert(cand.edge_count() == cur.seq.edge_count());
                const std::optional<double> v = eval.evaluate(cand);
                if (!v) {
                    exhausted_mid_scan = true;
                    break;
                }
                if (*v > best_val) {
                    best_val = *v;
                    best_seq = std::move(cand);
                }
            }
            if (best_val > cur.value + kImproveEps) {
                cur = {std::move(best_seq), best_val};
                improved = true;
            }
            if (exhausted_mid_scan) return improved_any || improved;
        } else {
            for (const Move& mv : moves) {
                CreationSequence cand = apply_move(cur.seq, mv);
                assert(cand.edge_count() == cur.seq.edge_count());
                const std::optional<double> v = eval.evaluate(cand);
                if (!v) return improved_any;
                if (*v > cur.value + kImproveEps) {
                    cur = {std::move(cand), *v};
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) return improved_any;
        improved_any = true;
    }
}

}  // namespace

CreationSequence shake(const CreationSequence& seq, int k, const GvnsConfig& cfg,
                       RandomStream& rng) {
    CreationSequence cur = seq;
    for (int step = 0; step < k; ++step) {
        Neighborhood nb = Neighborhood::N2;
        if (cfg.shake == ShakeMode::CoinFlip5050)
            nb = rng.below(2) == 0 ? Neighborhood::N1 : Neighborhood::N2;
        const std::optional<Move> mv = random_move(cur, nb, rng);
        if (!mv) break;  // realized shaking distance may fall short of k
        cur = apply_move(cur, *mv);
    }
    return cur;
}

VndResult vnd(const CreationSequence& start, const GvnsConfig& cfg, Evaluator& eval) {
    const std::optional<double> v0 = eval.evaluate(start);
    if (!v0) return {start, std::nullopt};
    Current cur{start, *v0};
    int l = 1;
    while (l <= 2 && !eval.exhausted()) {
        const Neighborhood nb = l == 1 ? Neighborhood::N1 : Neighborhood::N2;
        const bool improved = local_search(cur, nb, cfg.ls, eval);
        // local_search returns an N_l-local optimum, so re-running the same
        // neighborhood is a guaranteed no-op scan; an improvement in N2
        // restarts at N1, everything else advances.
        if (improved && l == 2)
            l = 1;
        else
            ++l;
    }
    return {cur.seq, cur.value};
}

RunResult gvns_run(const ProblemInstance& inst, const GvnsConfig& cfg) {
    const int k_max = cfg.k_max > 0 ? cfg.k_max : std::max(1, inst.n / 2);
    Evaluator eval(inst, cfg.budget);
    RandomStream rng(cfg.seed);

    Current best{init2_sol(inst), 0.0};
    if (const std::optional<double> v = eval.evaluate(best.seq)) best.value = *v;

    while (!eval.exhausted()) {
        int k = 1;
        while (k <= k_max && !eval.exhausted()) {
            const CreationSequence shaken = shake(best.seq, k, cfg, rng);
            const VndResult improved = vnd(shaken, cfg, eval);
            if (improved.value && *improved.value > best.value + kImproveEps) {
                best = {improved.seq, *improved.value};
                k = 1;
            } else {
                ++k;
            }
        }
    }
    return eval.result();
}

}  // namespace tgs
