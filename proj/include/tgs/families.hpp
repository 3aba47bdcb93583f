#pragma once

#include <string>
#include <vector>

#include "tgs/graph.hpp"

namespace tgs {

// Literature-known extremal families, keyed by how m relates to n:
//   1: m = n-1                      -> (n-1, 1)                 [star]
//   2: m = n+d, d in {0,2}          -> (2+d/2, n-3-d/2, 1)
//   3: m = n+d, d = 1 or d >= 6     -> (d+1, 1, n-3-d, 1)        [large-n caveat]
//   4: m = n+C(d-1,2)-1, d >= 5     -> (d-1, n-d, 1) or
//                                      (C(d-1,2), 1, n-2-C(d-1,2), 1)  [large-n caveat]
//   5: m = n+C(d-1,2)-2, 2n <= m < C(n,2)-1 -> (2, d-2, n-1-d, 1) [large-n caveat]
struct FamilyMatch {
    int bullet = 0;
    std::vector<Composition> candidates;  // bullet 4 carries two
    bool large_n_caveat = false;          // true for bullets 3-5
};

// All patterns applicable to (n, m); empty when none matches.
std::vector<FamilyMatch> known_extremal(const ProblemInstance& inst);

struct FamilyCheckRow {
    int n = 0;
    long long m = 0;
    int bullet = 0;
    bool large_n_caveat = false;
    Composition predicted;
    long long predicted_edges = 0;  // edge count of the predicted sequence
    bool feasible = false;          // predicted_edges == m
    double predicted_value = 0.0;   // lambda1 of the prediction (when feasible)
    double oracle_value = 0.0;
    bool match = false;  // predicted sequence is in the oracle argmax set
};

// Cross-checks every applicable pattern against the exhaustive oracle
// for all (n, m) with n in [n_min, n_max]. Mismatches are reported, not
// thrown: for the caveated bullets a small-n mismatch is a finding.
std::vector<FamilyCheckRow> verify_known_families(int n_min, int n_max);

// CSV report: n,m,bullet,caveat,predicted,predicted_edges,feasible,
// predicted_value,oracle_value,match
std::string family_report_csv(const std::vector<FamilyCheckRow>& rows);

}  // namespace tgs
