#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tgs/bco.hpp"
#include "tgs/evaluator.hpp"
#include "tgs/graph.hpp"
#include "tgs/gvns.hpp"

namespace tgs {

enum class SolverKind : std::uint8_t { Gvns, Bcoi };
enum class Variant : std::uint8_t { Baseline, Tuned };

std::string to_string(SolverKind s);
std::string to_string(Variant v);

// Seed expression over the variables n, m and the repetition index i
// (1-based), e.g. the default "n*i+m". Supports +, *, parentheses and
// integer literals; evaluated in 64-bit unsigned arithmetic.
class SeedFormula {
public:
    SeedFormula();  // "n*i+m"
    static SeedFormula parse(const std::string& text);

    std::uint64_t seed_for(long long n, long long m, long long i) const;
    const std::string& text() const { return text_; }

private:
    // Postfix program: operands push, operators pop two.
    struct Op {
        char kind;  // 'n','m','i','#','+','*'
        std::uint64_t literal = 0;
    };
    std::string text_;
    std::vector<Op> program_;
};

struct ExperimentSpec {
    ProblemInstance instance;
    SolverKind solver = SolverKind::Gvns;
    Variant variant = Variant::Baseline;
    int repetitions = 30;
    long long budget = 0;  // 0 = variant default (1000 baseline, 2000 tuned)
    SeedFormula seeds;
};

long long default_budget(Variant v);
GvnsConfig gvns_config_for(const ProblemInstance& inst, Variant v, long long budget,
                           std::uint64_t seed);
BcoConfig bco_config_for(Variant v, long long budget, std::uint64_t seed);

struct RunRecord {
    int repetition = 0;  // 1-based
    std::uint64_t seed = 0;
    RunResult result;
    double wall_ms = 0.0;
};

struct ExperimentRow {
    ProblemInstance instance;
    SolverKind solver;
    Variant variant;
    long long budget = 0;
    double init_value = 0.0;  // lambda1 of init2_sol, not charged to any budget
    int bests = 0;            // repetitions within 1e-9 of the row best
    double best_value = 0.0;
    double average_value = 0.0;
    CreationSequence best_sequence;
    std::vector<RunRecord> runs;  // ordered by repetition
};

// Runs the solver `repetitions` times with seed = seeds(n, m, i).
// Repetitions are independent jobs executed across OpenMP workers; each
// owns its stream and budget, so the row is identical to the serial one.
ExperimentRow run_experiment(const ExperimentSpec& spec);
ExperimentRow run_experiment_serial(const ExperimentSpec& spec);

// One row per m in [n-1, n(n-1)/2].
std::vector<ExperimentRow> sweep(int n, SolverKind solver, Variant variant,
                                 int repetitions, long long budget,
                                 const SeedFormula& seeds);

// Per-run CSV: instance,solver,variant,seed,best_value,evaluations_used,
// best_sequence,wall_ms. Timings default to 0 so that repeated seeded
// invocations stay byte-identical; pass with_timings for real clocks.
std::string runs_csv(const std::vector<ExperimentRow>& rows, bool with_timings = false);

// Aggregated CSV: n,m,solver,variant,budget,init_value,bests,best,average,
// best_sequence.
std::string aggregate_csv(const std::vector<ExperimentRow>& rows);

// Side-by-side text table in the usual comparison layout (init column,
// then #bests / best / average per solver). Values rounded half-up to
// two decimals at presentation only.
std::string render_comparison_table(const std::vector<ExperimentRow>& gvns_rows,
                                    const std::vector<ExperimentRow>& bcoi_rows);

// Head-concentration diagnostic: over positions 1..n-1 (0-based), the
// prefix of length ceil(1.2 * #ones) must hold all but at most two of
// the ones for the sequence to count as head-concentrated.
struct ConcentrationReport {
    int ones = 0;
    int prefix_len = 0;
    int ones_in_prefix = 0;
    bool concentrated = false;
};

ConcentrationReport head_concentration(const CreationSequence& seq);

// Full evaluation report for one sequence: n, m, adjacency matrix,
// lambda1 (6 decimals), spectrum, composition and the concentration
// diagnostic.
std::string eval_report(const CreationSequence& seq);

// Presentation rounding (half-up, two decimals).
double round2(double v);
std::string format2(double v);

}  // namespace tgs
