// Acceptance suite: one check per criterion, each printing a single
// [PASS]/[FAIL] line (details indented underneath). Run with no
// arguments for the whole suite or with --criterion N for one entry.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tgs/bco.hpp"
#include "tgs/construct.hpp"
#include "tgs/families.hpp"
#include "tgs/gvns.hpp"
#include "tgs/harness.hpp"
#include "tgs/moves.hpp"
#include "tgs/oracle.hpp"
#include "tgs/rng.hpp"
#include "tgs/spectral.hpp"

namespace {

using namespace tgs;

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> run;  // fills a detail block
};

CreationSequence ones_sequence(int n) {
    return CreationSequence(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1));
}

CreationSequence star_sequence(int n) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    bits.front() = 1;
    bits.back() = 1;
    return CreationSequence(std::move(bits));
}

CreationSequence random_sequence(int n, RandomStream& rng) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    bits.front() = 1;
    bits.back() = 1;
    for (int p = 1; p <= n - 2; ++p)
        bits[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(rng.below(2));
    return CreationSequence(std::move(bits));
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// ---- criterion 1: oracle ground truth at n=8 ------------------------------

bool criterion1(std::string& detail) {
    struct Row {
        long long m;
        double rounded;
        const char* best;
    };
    const std::vector<Row> rows = {{12, 3.85, "1 0 1 1 0 0 0 1"},
                                   {15, 4.52, "1 1 0 1 1 0 0 1"},
                                   {19, 5.33, "1 1 1 0 1 1 0 1"},
                                   {21, 5.77, "1 0 1 1 1 1 0 1"},
                                   {23, 6.10, "1 1 1 1 1 0 1 1"}};
    bool ok = true;
    for (const Row& row : rows) {
        const OracleResult res = oracle_optimum(ProblemInstance(8, row.m));
        const bool value_ok = std::abs(res.optimum_value - row.rounded) <= 0.005;
        bool seq_ok = false;
        const CreationSequence expected = CreationSequence::parse(row.best);
        for (const CreationSequence& s : res.argmax) seq_ok = seq_ok || s == expected;
        ok = ok && value_ok && seq_ok;
        detail += "  m=" + std::to_string(row.m) +
                  fmt(": optimum %.6f (target %.2f)", res.optimum_value, row.rounded) +
                  (value_ok ? "" : " VALUE MISMATCH") +
                  (seq_ok ? ", argmax has listed sequence" : ", LISTED SEQUENCE MISSING") +
                  "\n";
    }
    return ok;
}

// ---- criterion 2: initial-solution values ----------------------------------

bool criterion2(std::string& detail) {
    bool ok = true;
    const struct {
        long long m;
        double target;
    } rows[] = {{12, 3.78}, {15, 4.37}};
    for (const auto& row : rows) {
        const CreationSequence s = init2_sol(ProblemInstance(8, row.m));
        const double v = spectral_radius(s).lambda1;
        const bool this_ok = std::abs(v - row.target) <= 0.005;
        ok = ok && this_ok;
        detail += "  init2(8," + std::to_string(row.m) + ") = " + s.to_string() +
                  fmt(", lambda1 %.6f vs required %.2f -> ", v, row.target) +
                  (this_ok ? "ok" : "MISMATCH") + "\n";
    }
    if (!ok)
        detail +=
            "  note: the sequence produced for (8,15) is the one shown in the source\n"
            "  material, whose dominant eigenvalue is 4.4255 (rounds to 4.43); no\n"
            "  eigensolver can return 4.37 for it. See the project notes.\n";
    return ok;
}

// ---- criterion 3: eigensolver identities ------------------------------------

bool criterion3(std::string& detail) {
    bool ok = true;
    double worst_kn = 0.0, worst_star = 0.0;
    for (int n = 2; n <= 64; ++n) {
        worst_kn = std::max(worst_kn,
                            std::abs(spectral_radius(ones_sequence(n)).lambda1 - (n - 1)));
        if (n >= 3)
            worst_star = std::max(worst_star,
                                  std::abs(spectral_radius(star_sequence(n)).lambda1 -
                                           std::sqrt(static_cast<double>(n - 1))));
    }
    ok = ok && worst_kn <= 1e-10 && worst_star <= 1e-9;
    detail += fmt("  K_n max error %.3g (<=1e-10), star max error %.3g (<=1e-9)\n",
                  worst_kn, worst_star);

    RandomStream rng(0xACCE55);
    double worst_sum = 0.0, worst_sq = 0.0, worst_pj = 0.0, worst_pq = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(38));  // n <= 40
        const CreationSequence s = random_sequence(n, rng);
        const double power = spectral_radius(s).lambda1;
        const double quotient = spectral_radius_quotient(s);
        const SpectralResult full = full_spectrum(to_adjacency(s));
        double sum = 0.0, sq = 0.0;
        for (double ev : full.spectrum) {
            sum += ev;
            sq += ev * ev;
        }
        worst_sum = std::max(worst_sum, std::abs(sum) / n);
        worst_sq = std::max(worst_sq, std::abs(sq - 2.0 * s.edge_count()) / n);
        worst_pj = std::max(worst_pj, std::abs(power - full.lambda1));
        worst_pq = std::max(worst_pq, std::abs(power - quotient));
    }
    ok = ok && worst_sum <= 1e-8 && worst_sq <= 1e-8 && worst_pj <= 1e-8 &&
         worst_pq <= 1e-8;
    detail += fmt("  trace/n %.3g, frobenius/n %.3g (<=1e-8)\n", worst_sum, worst_sq);
    detail += fmt("  |power-jacobi| %.3g, |power-quotient| %.3g (<=1e-8)\n", worst_pj,
                  worst_pq);
    return ok;
}

// ---- criterion 4: solver optimality at desk scale ---------------------------

bool criterion4(std::string& detail) {
    bool ok = true;
    for (long long m : {12LL, 15LL, 19LL, 21LL, 23LL}) {
        const ProblemInstance inst(8, m);
        const OracleResult oracle = oracle_optimum(inst);
        int gvns_hits = 0, bcoi_hits = 0;
        for (long long i = 1; i <= 30; ++i) {
            const std::uint64_t seed = static_cast<std::uint64_t>(8 * i + m);
            const RunResult g =
                gvns_run(inst, gvns_config_for(inst, Variant::Baseline, 1000, seed));
            const RunResult b = bco_run(inst, bco_config_for(Variant::Baseline, 1000, seed));
            if (std::abs(g.best_value - oracle.optimum_value) <= 1e-9) ++gvns_hits;
            if (std::abs(b.best_value - oracle.optimum_value) <= 1e-9) ++bcoi_hits;
        }
        ok = ok && gvns_hits == 30 && bcoi_hits == 30;
        detail += "  m=" + std::to_string(m) + ": gvns " + std::to_string(gvns_hits) +
                  "/30, bcoi " + std::to_string(bcoi_hits) + "/30\n";
    }
    return ok;
}

// ---- criterion 5: large instances -------------------------------------------

struct LargeRow {
    int n;
    long long m;
    double target;
    const char* best;
};

const std::vector<LargeRow>& large_rows() {
    static const std::vector<LargeRow> rows = {
        {30, 100, 12.34,
         "1 1 1 1 1 1 1 0 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1"},
        {30, 220, 20.03,
         "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 1 0 0 0 0 0 0 0 0 1"},
        {30, 300, 23.65,
         "1 1 1 1 1 0 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0 0 0 1"},
        {30, 400, 27.58,
         "1 1 1 1 1 1 1 0 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 1"},
        {50, 100, 10.87,
         "1 1 1 1 0 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 "
         "0 0 0 0 0 0 0 0 0 0 0 0 1"},
        {50, 300, 22.89,
         "1 1 0 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 "
         "0 0 0 0 0 0 0 0 0 0 0 0 1"},
        {50, 500, 30.33,
         "1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0 0 0 0 "
         "0 0 0 0 0 0 0 0 0 0 0 0 1"},
        {50, 1000, 44.02,
         "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 "
         "1 1 0 1 1 1 1 1 0 0 0 0 1"}};
    return rows;
}

bool criterion5(std::string& detail) {
    bool ok = true;
    detail += "  deterministic part (reported best sequences):\n";
    for (const LargeRow& row : large_rows()) {
        const CreationSequence s = CreationSequence::parse(row.best);
        const bool m_ok = s.edge_count() == row.m && s.size() == row.n;
        const double v = spectral_radius(s).lambda1;
        const bool v_ok = std::abs(v - row.target) <= 0.005;
        ok = ok && m_ok && v_ok;
        detail += "    G_" + std::to_string(row.n) + "_" + std::to_string(row.m) +
                  fmt(": lambda1 %.6f vs %.2f -> ", v, row.target) +
                  (m_ok && v_ok ? "ok" : "MISMATCH") + "\n";
    }
    detail += "  stochastic part (tuned GVNS, budget 2000, gate >=25/30):\n";
    for (const LargeRow& row : large_rows()) {
        const ProblemInstance inst(row.n, row.m);
        int hits = 0;
        for (long long i = 1; i <= 30; ++i) {
            const std::uint64_t seed =
                static_cast<std::uint64_t>(row.n) * static_cast<std::uint64_t>(i) +
                static_cast<std::uint64_t>(row.m);
            const RunResult g =
                gvns_run(inst, gvns_config_for(inst, Variant::Tuned, 2000, seed));
            if (g.best_value >= row.target - 0.005) ++hits;
        }
        ok = ok && hits >= 25;
        detail += "    G_" + std::to_string(row.n) + "_" + std::to_string(row.m) + ": " +
                  std::to_string(hits) + "/30" + (hits == 30 ? " (fully stable)" : "") +
                  (hits >= 25 ? "" : " BELOW GATE") + "\n";
    }
    return ok;
}

// ---- criterion 6: move-operator properties -----------------------------------

bool criterion6(std::string& detail) {
    RandomStream rng(0x6E1687B0);
    long long checked = 0;
    bool ok = true;
    while (checked < 10000 && ok) {
        const int n = 4 + static_cast<int>(rng.below(13));  // n <= 16
        const CreationSequence s = random_sequence(n, rng);
        const std::optional<Move> mv = random_move(s, Neighborhood::Any, rng);
        if (!mv) continue;
        const CreationSequence t = apply_move(s, *mv);
        ++checked;
        ok = ok && t.edge_count() == s.edge_count();
        // the inverse move restores the original sequence
        Move inverse = *mv;
        switch (mv->kind) {
            case MoveKind::ShiftPair: inverse = {MoveKind::ShiftPair, mv->b, mv->a, -1}; break;
            case MoveKind::Split: inverse = {MoveKind::Merge, mv->a, mv->b, mv->c}; break;
            case MoveKind::Merge: inverse = {MoveKind::Split, mv->a, mv->b, mv->c}; break;
        }
        ok = ok && is_applicable(t, inverse) && apply_move(t, inverse) == s;
        const AdjacencyMatrix adj = to_adjacency(t);
        ok = ok && is_stepwise(adj) && !has_forbidden_induced(adj);
    }
    detail += "  " + std::to_string(checked) +
              " random (sequence, move) pairs: edge counts exact, inverses restore,\n"
              "  all outputs stepwise and {P4,C4,2K2}-free\n";
    return ok;
}

// ---- criterion 7: known-families cross-check ----------------------------------

bool criterion7(std::string& detail) {
    const std::vector<FamilyCheckRow> rows = verify_known_families(6, 12);
    bool ok = true;
    int gated = 0, gated_ok = 0, caveated = 0, caveated_ok = 0;
    for (const FamilyCheckRow& row : rows) {
        if (row.bullet <= 2) {
            ++gated;
            if (row.match) ++gated_ok;
            if (!row.match) {
                ok = false;
                detail += "  GATED MISMATCH n=" + std::to_string(row.n) +
                          " m=" + std::to_string(row.m) + " predicted " +
                          to_string(row.predicted) + "\n";
            }
        } else {
            ++caveated;
            if (row.match) ++caveated_ok;
        }
    }
    detail += "  gated (star, d=0, d=2): " + std::to_string(gated_ok) + "/" +
              std::to_string(gated) + " match the oracle\n";
    detail += "  caveated bullets (report only): " + std::to_string(caveated_ok) + "/" +
              std::to_string(caveated) + " match at these small n\n";
    return ok;
}

// ---- criterion 8: determinism --------------------------------------------------

bool criterion8(std::string& detail) {
    bool ok = true;
    for (SolverKind solver : {SolverKind::Gvns, SolverKind::Bcoi}) {
        const ExperimentSpec spec{ProblemInstance(8, 15), solver, Variant::Baseline, 10,
                                  300, SeedFormula()};
        const ExperimentRow a = run_experiment(spec);
        const ExperimentRow b = run_experiment(spec);
        const ExperimentRow c = run_experiment_serial(spec);
        const bool same = runs_csv({a}) == runs_csv({b}) &&
                          runs_csv({a}) == runs_csv({c}) &&
                          aggregate_csv({a}) == aggregate_csv({b});
        ok = ok && same;
        detail += std::string("  ") + (solver == SolverKind::Gvns ? "gvns" : "bcoi") +
                  ": repeated and serial/parallel CSV byte-identical -> " +
                  (same ? "yes" : "NO") + "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
    }

    const std::vector<Criterion> criteria = {
        {1, "oracle ground truth at n=8 (values and argmax sequences)", criterion1},
        {2, "initial-solution values at (8,12) and (8,15)", criterion2},
        {3, "eigensolver identities and three-route agreement", criterion3},
        {4, "baseline solvers reach the oracle optimum 30/30 at n=8", criterion4},
        {5, "large instances: reported values and tuned-GVNS stability", criterion5},
        {6, "move operators preserve feasibility and threshold structure", criterion6},
        {7, "known extremal families against the oracle, n=6..12", criterion7},
        {8, "seeded experiments emit byte-identical CSV", criterion8},
    };

    int failures = 0;
    for (const Criterion& crit : criteria) {
        if (only != 0 && crit.number != only) continue;
        std::string detail;
        const bool ok = crit.run(detail);
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", crit.number,
                    crit.title.c_str());
        std::fputs(detail.c_str(), stdout);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (only == 0)
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
