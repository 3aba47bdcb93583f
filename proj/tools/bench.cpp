// Compares the OpenMP kernels against their serial references: the
// exhaustive oracle sweep and the repetition harness. Results must match
// exactly; only the wall time differs.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "tgs/harness.hpp"
#include "tgs/oracle.hpp"

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP benchmark"};
    int oracle_n = 20;
    long long oracle_m = 0;  // 0 = middle of the feasible interval
    int reps = 10;
    long long budget = 500;
    int harness_n = 30;
    long long harness_m = 220;
    app.add_option("--oracle-n", oracle_n, "oracle instance size");
    app.add_option("--oracle-m", oracle_m, "oracle edge count (default: middle)");
    app.add_option("--reps", reps, "harness repetitions");
    app.add_option("--budget", budget, "harness evaluation budget");
    app.add_option("--harness-n", harness_n, "harness instance n");
    app.add_option("--harness-m", harness_m, "harness instance m");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

    {
        if (oracle_m == 0)
            oracle_m = (static_cast<long long>(oracle_n) - 1 +
                        static_cast<long long>(oracle_n) * (oracle_n - 1) / 2) /
                       2;
        const tgs::ProblemInstance inst(oracle_n, oracle_m);
        auto t0 = std::chrono::steady_clock::now();
        const tgs::OracleResult serial = tgs::oracle_optimum_serial(inst);
        const double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        const tgs::OracleResult parallel = tgs::oracle_optimum(inst);
        const double t_parallel = ms_since(t0);
        const bool same = serial.optimum_value == parallel.optimum_value &&
                          serial.argmax == parallel.argmax &&
                          serial.feasible_count == parallel.feasible_count;
        std::printf("oracle n=%d m=%lld feasible=%lld optimum=%.6f\n", inst.n, inst.m,
                    serial.feasible_count, serial.optimum_value);
        std::printf("  serial   %10.1f ms\n", t_serial);
        std::printf("  openmp   %10.1f ms   speedup %.2fx   identical=%s\n", t_parallel,
                    t_serial / t_parallel, same ? "yes" : "NO");
    }

    {
        const tgs::ExperimentSpec spec{tgs::ProblemInstance(harness_n, harness_m),
                                       tgs::SolverKind::Gvns, tgs::Variant::Tuned, reps,
                                       budget, tgs::SeedFormula()};
        auto t0 = std::chrono::steady_clock::now();
        const tgs::ExperimentRow serial = tgs::run_experiment_serial(spec);
        const double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        const tgs::ExperimentRow parallel = tgs::run_experiment(spec);
        const double t_parallel = ms_since(t0);
        const bool same = tgs::runs_csv({serial}) == tgs::runs_csv({parallel});
        std::printf("harness n=%d m=%lld reps=%d budget=%lld best=%.6f\n", harness_n,
                    harness_m, reps, budget, serial.best_value);
        std::printf("  serial   %10.1f ms\n", t_serial);
        std::printf("  openmp   %10.1f ms   speedup %.2fx   identical=%s\n", t_parallel,
                    t_serial / t_parallel, same ? "yes" : "NO");
    }
    return 0;
}
