#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "tgs/graph.hpp"

namespace tgs {

// 2^(n-2) interior patterns is the enumeration cap (about 17M at n=26).
inline constexpr int kEnumerationCapN = 26;

// Lexicographic stream of every feasible sequence for an instance:
// bit 0 and bit n-1 fixed at 1, interior bits sweeping in dictionary
// order, filtered by edge sum == m. Usable in range-for; O(1) memory.
class FeasibleRange {
public:
    explicit FeasibleRange(const ProblemInstance& inst);  // CapacityError above the cap

    class iterator {
    public:
        using value_type = CreationSequence;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(int n, long long m, std::uint64_t mask, std::uint64_t end);

        CreationSequence operator*() const;
        iterator& operator++();
        iterator operator++(int);
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        void settle();  // advance mask to the next feasible pattern

        int n_ = 0;
        long long m_ = 0;
        std::uint64_t mask_ = 0;
        std::uint64_t end_ = 0;
    };

    iterator begin() const;
    iterator end() const;

private:
    int n_;
    long long m_;
    std::uint64_t mask_count_;
};

FeasibleRange enumerate_feasible(const ProblemInstance& inst);

// Interior mask -> sequence; the high mask bit is position 1, so
// ascending masks enumerate sequences in lexicographic order.
CreationSequence sequence_from_mask(int n, std::uint64_t mask);

long long feasible_count(const ProblemInstance& inst);

struct OracleResult {
    double optimum_value = 0.0;
    std::vector<CreationSequence> argmax;  // lexicographic, ties within 1e-9
    long long feasible_count = 0;
};

// Certified optimum by exhaustive sweep. The OpenMP version partitions
// the mask range across threads and merges per-thread candidate lists;
// results are identical to the serial reference bit for bit.
OracleResult oracle_optimum(const ProblemInstance& inst);
OracleResult oracle_optimum_serial(const ProblemInstance& inst);

}  // namespace tgs
