#include "tgs/families.hpp"

#include <algorithm>
#include <cstdio>

#include "tgs/oracle.hpp"
#include "tgs/spectral.hpp"

namespace tgs {
namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

bool parts_valid(const Composition& c, int n) {
    long long sum = 0;
    for (int p : c.parts) {
        if (p < 1) return false;
        sum += p;
    }
    return sum == n;
}

void add_match(std::vector<FamilyMatch>& out, int bullet, bool caveat,
               std::vector<Composition> candidates, int n) {
    std::vector<Composition> kept;
    for (Composition& c : candidates)
        if (parts_valid(c, n)) kept.push_back(std::move(c));
    if (!kept.empty()) out.push_back({bullet, std::move(kept), caveat});
}

}  // namespace

std::vector<FamilyMatch> known_extremal(const ProblemInstance& inst) {
    const long long n = inst.n;
    const long long m = inst.m;
    std::vector<FamilyMatch> out;

    if (m == n - 1)
        add_match(out, 1, false, {Composition{{inst.n - 1, 1}}}, inst.n);

    const long long d_lin = m - n;
    if (d_lin == 0 || d_lin == 2) {
        const int d = static_cast<int>(d_lin);
        add_match(out, 2, false,
                  {Composition{{2 + d / 2, inst.n - 3 - d / 2, 1}}}, inst.n);
    }
    if (d_lin == 1 || d_lin >= 6) {
        const int d = static_cast<int>(d_lin);
        add_match(out, 3, true, {Composition{{d + 1, 1, inst.n - 3 - d, 1}}}, inst.n);
    }

    // m = n + C(d-1,2) - 1, fixed d >= 5: two competing candidates.
    for (long long d = 5; choose2(d - 1) - 1 <= m - n; ++d) {
        if (n + choose2(d - 1) - 1 != m) continue;
        const int c2 = static_cast<int>(choose2(d - 1));
        add_match(out, 4, true,
                  {Composition{{static_cast<int>(d) - 1, inst.n - static_cast<int>(d), 1}},
                   Composition{{c2, 1, inst.n - 2 - c2, 1}}},
                  inst.n);
        break;
    }

    // m = n + C(d-1,2) - 2, applied only inside its side condition
    // 2n <= m < C(n,2) - 1.
    if (2 * n <= m && m < choose2(n) - 1) {
        for (long long d = 3; choose2(d - 1) - 2 <= m - n; ++d) {
            if (n + choose2(d - 1) - 2 != m) continue;
            add_match(out, 5, true,
                      {Composition{{2, static_cast<int>(d) - 2,
                                    inst.n - 1 - static_cast<int>(d), 1}}},
                      inst.n);
            break;
        }
    }
    return out;
}

std::vector<FamilyCheckRow> verify_known_families(int n_min, int n_max) {
    std::vector<FamilyCheckRow> rows;
    for (int n = std::max(2, n_min); n <= n_max; ++n) {
        const long long m_max = static_cast<long long>(n) * (n - 1) / 2;
        for (long long m = n - 1; m <= m_max; ++m) {
            const ProblemInstance inst(n, m);
            const std::vector<FamilyMatch> matches = known_extremal(inst);
            if (matches.empty()) continue;
            const OracleResult oracle = oracle_optimum(inst);
            for (const FamilyMatch& match : matches) {
                for (const Composition& comp : match.candidates) {
                    FamilyCheckRow row;
                    row.n = n;
                    row.m = m;
                    row.bullet = match.bullet;
                    row.large_n_caveat = match.large_n_caveat;
                    row.predicted = comp;
                    row.oracle_value = oracle.optimum_value;
                    const CreationSequence seq = composition_to_sequence(comp);
                    row.predicted_edges = seq.edge_count();
                    row.feasible = row.predicted_edges == m;
                    if (row.feasible) {
                        row.predicted_value = spectral_radius(seq).lambda1;
                        row.match = std::find(oracle.argmax.begin(), oracle.argmax.end(),
                                              seq) != oracle.argmax.end();
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

std::string family_report_csv(const std::vector<FamilyCheckRow>& rows) {
    std::string out =
        "n,m,bullet,caveat,predicted,predicted_edges,feasible,predicted_value,"
        "oracle_value,match\n";
    char buf[64];
    for (const FamilyCheckRow& r : rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
               std::to_string(r.bullet) + ',' + (r.large_n_caveat ? "1" : "0") + ",\"" +
               to_string(r.predicted) + "\"," + std::to_string(r.predicted_edges) + ',' +
               (r.feasible ? "1" : "0") + ',';
        std::snprintf(buf, sizeof buf, "%.9f", r.predicted_value);
        out += buf;
        out += ',';
        std::snprintf(buf, sizeof buf, "%.9f", r.oracle_value);
        out += buf;
        out += ',';
        out += r.match ? "1" : "0";
        out += '\n';
    }
    return out;
}

}  // namespace tgs
