// Command-line front end: solve/sweep/table run the seeded repetition
// protocol, enumerate/eval/verify-families expose the exact machinery.
// Exit codes: 0 success, 1 argument error, 2 capacity error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tgs/construct.hpp"
#include "tgs/families.hpp"
#include "tgs/harness.hpp"
#include "tgs/oracle.hpp"
#include "tgs/spectral.hpp"

namespace {

struct CommonOpts {
    int n = 0;
    long long m = 0;
    std::string solver = "gvns";
    std::string variant = "baseline";
    long long budget = 0;  // 0 = variant default
    int reps = 30;
    std::string seed_formula = "n*i+m";
    bool timings = false;
    std::string out_path;
};

tgs::SolverKind parse_solver(const std::string& s) {
    if (s == "gvns") return tgs::SolverKind::Gvns;
    if (s == "bcoi") return tgs::SolverKind::Bcoi;
    throw std::invalid_argument("unknown solver '" + s + "' (expected gvns or bcoi)");
}

tgs::Variant parse_variant(const std::string& s) {
    if (s == "baseline") return tgs::Variant::Baseline;
    if (s == "tuned") return tgs::Variant::Tuned;
    throw std::invalid_argument("unknown variant '" + s + "' (expected baseline or tuned)");
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"threshold-graph spectral radius search"};
    app.require_subcommand(1);

    CommonOpts opt;

    CLI::App* solve = app.add_subcommand("solve", "run one instance, emit per-run CSV");
    solve->add_option("--n", opt.n, "vertex count")->required();
    solve->add_option("--m", opt.m, "edge count")->required();
    solve->add_option("--solver", opt.solver, "gvns or bcoi");
    solve->add_option("--variant", opt.variant, "baseline or tuned");
    solve->add_option("--budget", opt.budget, "objective evaluations per run");
    solve->add_option("--reps", opt.reps, "repetitions");
    solve->add_option("--seed-formula", opt.seed_formula, "seed expression over n, m, i");
    solve->add_flag("--timings", opt.timings, "emit real wall_ms (non-deterministic)");
    solve->add_option("--out", opt.out_path, "write to file instead of stdout");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "all m for one n, aggregated CSV");
    sweep_cmd->add_option("--n", opt.n, "vertex count")->required();
    sweep_cmd->add_option("--solver", opt.solver, "gvns or bcoi");
    sweep_cmd->add_option("--variant", opt.variant, "baseline or tuned");
    sweep_cmd->add_option("--budget", opt.budget, "objective evaluations per run");
    sweep_cmd->add_option("--reps", opt.reps, "repetitions");
    sweep_cmd->add_option("--seed-formula", opt.seed_formula, "seed expression");
    sweep_cmd->add_option("--out", opt.out_path, "write to file instead of stdout");

    std::vector<long long> table_ms;
    CLI::App* table = app.add_subcommand("table", "side-by-side GVNS/BCOi comparison");
    table->add_option("--n", opt.n, "vertex count")->required();
    table->add_option("--m", table_ms, "edge counts (repeatable)")->required();
    table->add_option("--variant", opt.variant, "baseline or tuned");
    table->add_option("--budget", opt.budget, "objective evaluations per run");
    table->add_option("--reps", opt.reps, "repetitions");
    table->add_option("--seed-formula", opt.seed_formula, "seed expression");
    table->add_option("--out", opt.out_path, "write to file instead of stdout");

    bool enum_oracle = false;
    bool enum_count_only = false;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list feasible sequences");
    enumerate->add_option("--n", opt.n, "vertex count")->required();
    enumerate->add_option("--m", opt.m, "edge count")->required();
    enumerate->add_flag("--oracle", enum_oracle, "report optimum and argmax instead");
    enumerate->add_flag("--count", enum_count_only, "report the feasible count only");

    std::vector<std::string> eval_tokens;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one sequence");
    eval_cmd->add_option("sequence", eval_tokens, "bits, e.g. 1 0 0 1 0 1 0 1")->required();

    int fam_from = 6, fam_to = 12;
    CLI::App* families = app.add_subcommand("verify-families",
                                            "cross-check known extremal families");
    families->add_option("--n-from", fam_from, "smallest n");
    families->add_option("--n-to", fam_to, "largest n");
    families->add_option("--out", opt.out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }

    try {
        const tgs::SeedFormula seeds = tgs::SeedFormula::parse(opt.seed_formula);

        if (solve->parsed()) {
            tgs::ExperimentSpec spec{tgs::ProblemInstance(opt.n, opt.m),
                                     parse_solver(opt.solver), parse_variant(opt.variant),
                                     opt.reps, opt.budget, seeds};
            const tgs::ExperimentRow row = tgs::run_experiment(spec);
            write_output(tgs::runs_csv({row}, opt.timings), opt.out_path);
        } else if (sweep_cmd->parsed()) {
            const std::vector<tgs::ExperimentRow> rows =
                tgs::sweep(opt.n, parse_solver(opt.solver), parse_variant(opt.variant),
                           opt.reps, opt.budget, seeds);
            write_output(tgs::aggregate_csv(rows), opt.out_path);
        } else if (table->parsed()) {
            const tgs::Variant variant = parse_variant(opt.variant);
            std::vector<tgs::ExperimentRow> gvns_rows;
            std::vector<tgs::ExperimentRow> bcoi_rows;
            for (long long m : table_ms) {
                tgs::ProblemInstance inst(opt.n, m);
                gvns_rows.push_back(tgs::run_experiment({inst, tgs::SolverKind::Gvns,
                                                         variant, opt.reps, opt.budget,
                                                         seeds}));
                bcoi_rows.push_back(tgs::run_experiment({inst, tgs::SolverKind::Bcoi,
                                                         variant, opt.reps, opt.budget,
                                                         seeds}));
            }
            write_output(tgs::render_comparison_table(gvns_rows, bcoi_rows), opt.out_path);
        } else if (enumerate->parsed()) {
            const tgs::ProblemInstance inst(opt.n, opt.m);
            if (enum_count_only) {
                std::cout << tgs::feasible_count(inst) << '\n';
            } else if (enum_oracle) {
                const tgs::OracleResult res = tgs::oracle_optimum(inst);
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.9f", res.optimum_value);
                std::cout << "optimum: " << buf << '\n'
                          << "feasible: " << res.feasible_count << '\n';
                for (const tgs::CreationSequence& seq : res.argmax)
                    std::cout << "argmax: " << seq.to_string() << '\n';
            } else {
                for (const tgs::CreationSequence& seq : tgs::enumerate_feasible(inst))
                    std::cout << seq.to_string() << '\n';
            }
        } else if (eval_cmd->parsed()) {
            std::string joined;
            for (const std::string& t : eval_tokens) {
                if (!joined.empty()) joined += ' ';
                joined += t;
            }
            const tgs::CreationSequence seq = tgs::CreationSequence::parse(joined);
            std::cout << tgs::eval_report(seq);
        } else if (families->parsed()) {
            const std::vector<tgs::FamilyCheckRow> rows =
                tgs::verify_known_families(fam_from, fam_to);
            write_output(tgs::family_report_csv(rows), opt.out_path);
        }
    } catch (const tgs::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
