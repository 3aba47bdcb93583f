#include "tgs/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <stdexcept>

#include "tgs/construct.hpp"

namespace tgs {
namespace {

constexpr double kTieTol = 1e-9;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string instance_label(const ProblemInstance& inst) {
    return "G_" + std::to_string(inst.n) + "_" + std::to_string(inst.m);
}

RunResult dispatch(const ProblemInstance& inst, SolverKind solver, Variant variant,
                   long long budget, std::uint64_t seed) {
    if (solver == SolverKind::Gvns)
        return gvns_run(inst, gvns_config_for(inst, variant, budget, seed));
    return bco_run(inst, bco_config_for(variant, budget, seed));
}

}  // namespace

std::string to_string(SolverKind s) { return s == SolverKind::Gvns ? "gvns" : "bcoi"; }

std::string to_string(Variant v) { return v == Variant::Baseline ? "baseline" : "tuned"; }

SeedFormula::SeedFormula() : text_("n*i+m") {
    program_ = {{'n', 0}, {'i', 0}, {'*', 0}, {'m', 0}, {'+', 0}};
}

SeedFormula SeedFormula::parse(const std::string& text) {
    SeedFormula f;
    f.text_ = text;
    f.program_.clear();

    std::size_t pos = 0;
    const auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("seed formula: " + why + " at offset " +
                                    std::to_string(pos));
    };

    std::function<void()> expr;
    const std::function<void()> factor = [&] {
        skip();
        if (pos >= text.size()) fail("unexpected end");
        const char ch = text[pos];
        if (ch == '(') {
            ++pos;
            expr();
            skip();
            if (pos >= text.size() || text[pos] != ')') fail("missing ')'");
            ++pos;
        } else if (ch == 'n' || ch == 'm' || ch == 'i') {
            f.program_.push_back({ch, 0});
            ++pos;
        } else if (ch >= '0' && ch <= '9') {
            std::uint64_t lit = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                lit = lit * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                ++pos;
            }
            f.program_.push_back({'#', lit});
        } else {
            fail(std::string("unexpected character '") + ch + "'");
        }
    };
    const std::function<void()> term = [&] {
        factor();
        for (;;) {
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                factor();
                f.program_.push_back({'*', 0});
            } else {
                return;
            }
        }
    };
    expr = [&] {
        term();
        for (;;) {
            skip();
            if (pos < text.size() && text[pos] == '+') {
                ++pos;
                term();
                f.program_.push_back({'+', 0});
            } else {
                return;
            }
        }
    };
    expr();
    skip();
    if (pos != text.size()) fail("trailing input");
    return f;
}

std::uint64_t SeedFormula::seed_for(long long n, long long m, long long i) const {
    std::vector<std::uint64_t> stack;
    for (const Op& op : program_) {
        switch (op.kind) {
            case 'n': stack.push_back(static_cast<std::uint64_t>(n)); break;
            case 'm': stack.push_back(static_cast<std::uint64_t>(m)); break;
            case 'i': stack.push_back(static_cast<std::uint64_t>(i)); break;
            case '#': stack.push_back(op.literal); break;
            case '+':
            case '*': {
                const std::uint64_t b = stack.back();
                stack.pop_back();
                const std::uint64_t a = stack.back();
                stack.pop_back();
                stack.push_back(op.kind == '+' ? a + b : a * b);
                break;
            }
            default: throw std::logic_error("seed formula: bad opcode");
        }
    }
    return stack.back();
}

long long default_budget(Variant v) { return v == Variant::Tuned ? 2000 : 1000; }

GvnsConfig gvns_config_for(const ProblemInstance& inst, Variant v, long long budget,
                           std::uint64_t seed) {
    GvnsConfig cfg;
    cfg.k_max = std::max(1, inst.n / 2);
    cfg.shake = v == Variant::Tuned ? ShakeMode::CoinFlip5050 : ShakeMode::N2Only;
    cfg.ls = v == Variant::Tuned ? LsStrategy::FirstImprovement : LsStrategy::BestImprovement;
    cfg.budget = budget;
    cfg.seed = seed;
    return cfg;
}

BcoConfig bco_config_for(Variant v, long long budget, std::uint64_t seed) {
    BcoConfig cfg;
    cfg.budget = budget;
    cfg.seed = seed;
    cfg.elitist_restart = v == Variant::Tuned;
    return cfg;
}

namespace {

ExperimentRow run_common(const ExperimentSpec& spec, [[maybe_unused]] bool parallel) {
    const ProblemInstance& inst = spec.instance;
    if (spec.repetitions < 1)
        throw std::invalid_argument("experiment: repetitions must be >= 1");
    const long long budget = spec.budget > 0 ? spec.budget : default_budget(spec.variant);
    const double init_value = spectral_radius(init2_sol(inst)).lambda1;

    std::vector<std::optional<RunRecord>> slots(static_cast<std::size_t>(spec.repetitions));
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 1; i <= spec.repetitions; ++i) {
        try {
            const std::uint64_t seed = spec.seeds.seed_for(inst.n, inst.m, i);
            const auto t0 = std::chrono::steady_clock::now();
            RunResult result = dispatch(inst, spec.solver, spec.variant, budget, seed);
            const auto t1 = std::chrono::steady_clock::now();
            const double wall_ms =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
            slots[static_cast<std::size_t>(i - 1)] =
                RunRecord{i, seed, std::move(result), wall_ms};
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    std::vector<RunRecord> runs;
    runs.reserve(slots.size());
    for (std::optional<RunRecord>& s : slots) runs.push_back(std::move(*s));

    double best = runs.front().result.best_value;
    std::size_t best_at = 0;
    double sum = 0.0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const double v = runs[r].result.best_value;
        sum += v;
        if (v > best) {
            best = v;
            best_at = r;
        }
    }
    int bests = 0;
    for (const RunRecord& r : runs)
        if (r.result.best_value >= best - kTieTol) ++bests;

    return ExperimentRow{inst,
                         spec.solver,
                         spec.variant,
                         budget,
                         init_value,
                         bests,
                         best,
                         sum / static_cast<double>(runs.size()),
                         runs[best_at].result.best_sequence,
                         std::move(runs)};
}

}  // namespace

ExperimentRow run_experiment(const ExperimentSpec& spec) { return run_common(spec, true); }

ExperimentRow run_experiment_serial(const ExperimentSpec& spec) {
    return run_common(spec, false);
}

std::vector<ExperimentRow> sweep(int n, SolverKind solver, Variant variant, int repetitions,
                                 long long budget, const SeedFormula& seeds) {
    std::vector<ExperimentRow> rows;
    const long long m_max = static_cast<long long>(n) * (n - 1) / 2;
    for (long long m = n - 1; m <= m_max; ++m) {
        ExperimentSpec spec{ProblemInstance(n, m), solver, variant, repetitions, budget, seeds};
        rows.push_back(run_experiment(spec));
    }
    return rows;
}

std::string runs_csv(const std::vector<ExperimentRow>& rows, bool with_timings) {
    std::string out =
        "instance,solver,variant,seed,best_value,evaluations_used,best_sequence,wall_ms\n";
    for (const ExperimentRow& row : rows) {
        for (const RunRecord& run : row.runs) {
            out += instance_label(row.instance) + ',' + to_string(row.solver) + ',' +
                   to_string(row.variant) + ',' + std::to_string(run.seed) + ',' +
                   g17(run.result.best_value) + ',' +
                   std::to_string(run.result.evaluations_used) + ",\"" +
                   run.result.best_sequence.to_string() + "\",";
            if (with_timings) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", run.wall_ms);
                out += buf;
            } else {
                out += '0';
            }
            out += '\n';
        }
    }
    return out;
}

std::string aggregate_csv(const std::vector<ExperimentRow>& rows) {
    std::string out =
        "n,m,solver,variant,budget,init_value,bests,best,average,best_sequence\n";
    for (const ExperimentRow& row : rows) {
        out += std::to_string(row.instance.n) + ',' + std::to_string(row.instance.m) + ',' +
               to_string(row.solver) + ',' + to_string(row.variant) + ',' +
               std::to_string(row.budget) + ',' + g17(row.init_value) + ',' +
               std::to_string(row.bests) + ',' + g17(row.best_value) + ',' +
               g17(row.average_value) + ",\"" + row.best_sequence.to_string() + "\"\n";
    }
    return out;
}

std::string render_comparison_table(const std::vector<ExperimentRow>& gvns_rows,
                                    const std::vector<ExperimentRow>& bcoi_rows) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %9s | %-26s | %-26s\n", "", "", "GVNS", "BCOi");
    out += line;
    std::snprintf(line, sizeof line, "%-10s %9s | %6s %9s %9s | %6s %9s %9s\n", "Graph",
                  "Init.sol.", "#bests", "best", "avg", "#bests", "best", "avg");
    out += line;

    const auto find_in = [](const std::vector<ExperimentRow>& rows,
                            const ProblemInstance& inst) -> const ExperimentRow* {
        for (const ExperimentRow& r : rows)
            if (r.instance.n == inst.n && r.instance.m == inst.m) return &r;
        return nullptr;
    };
    const auto emit = [&](const ExperimentRow* g, const ExperimentRow* b) {
        const ExperimentRow* any = g ? g : b;
        const std::string gb = g ? std::to_string(g->bests) : "-";
        const std::string gbest = g ? format2(g->best_value) : "-";
        const std::string gavg = g ? format2(g->average_value) : "-";
        const std::string bb = b ? std::to_string(b->bests) : "-";
        const std::string bbest = b ? format2(b->best_value) : "-";
        const std::string bavg = b ? format2(b->average_value) : "-";
        std::snprintf(line, sizeof line, "%-10s %9s | %6s %9s %9s | %6s %9s %9s\n",
                      instance_label(any->instance).c_str(),
                      format2(any->init_value).c_str(), gb.c_str(), gbest.c_str(),
                      gavg.c_str(), bb.c_str(), bbest.c_str(), bavg.c_str());
        out += line;
    };
    for (const ExperimentRow& g : gvns_rows) emit(&g, find_in(bcoi_rows, g.instance));
    for (const ExperimentRow& b : bcoi_rows)
        if (!find_in(gvns_rows, b.instance)) emit(nullptr, &b);
    return out;
}

ConcentrationReport head_concentration(const CreationSequence& seq) {
    const int n = seq.size();
    ConcentrationReport rep;
    for (int p = 1; p < n; ++p)
        if (seq.bit(p)) ++rep.ones;
    rep.prefix_len = (12 * rep.ones + 9) / 10;  // ceil(1.2 * ones)
    const int prefix_end = std::min(n - 1, rep.prefix_len);  // positions 1..prefix_end
    for (int p = 1; p <= prefix_end; ++p)
        if (seq.bit(p)) ++rep.ones_in_prefix;
    rep.concentrated = rep.ones_in_prefix >= rep.ones - 2;
    return rep;
}

std::string eval_report(const CreationSequence& seq) {
    const AdjacencyMatrix adj = to_adjacency(seq);
    const SpectralResult full = full_spectrum(adj);
    const Composition comp = to_composition(seq);
    const ConcentrationReport conc = head_concentration(seq);

    char buf[64];
    std::string out;
    out += "n: " + std::to_string(seq.size()) + '\n';
    out += "m: " + std::to_string(seq.edge_count()) + '\n';
    out += "sequence: " + seq.to_string() + '\n';
    out += "composition: " + to_string(comp) + '\n';
    std::snprintf(buf, sizeof buf, "%.6f", full.lambda1);
    out += std::string("lambda1: ") + buf + '\n';
    out += "adjacency:\n";
    for (int i = 0; i < adj.n(); ++i) {
        for (int j = 0; j < adj.n(); ++j) {
            if (j) out += ' ';
            out += adj.at(i, j) ? '1' : '0';
        }
        out += '\n';
    }
    out += "spectrum:";
    for (double ev : full.spectrum) {
        std::snprintf(buf, sizeof buf, " %.6f", ev);
        out += buf;
    }
    out += '\n';
    out += "head-concentration: ones=" + std::to_string(conc.ones) +
           " prefix_len=" + std::to_string(conc.prefix_len) +
           " ones_in_prefix=" + std::to_string(conc.ones_in_prefix) +
           " concentrated=" + (conc.concentrated ? "yes" : "no") + '\n';
    return out;
}

double round2(double v) { return std::floor(v * 100.0 + 0.5) / 100.0; }

std::string format2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", round2(v));
    return buf;
}

}  // namespace tgs
