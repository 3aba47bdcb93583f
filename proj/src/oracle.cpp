#include "tgs/oracle.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tgs/spectral.hpp"

namespace tgs {
namespace {

constexpr double kTieTol = 1e-9;

long long mask_edge_sum(int n, std::uint64_t mask) {
    // Interior bit for position p (1..n-2) sits at mask bit n-2-p, so the
    // high bit is position 1 and ascending masks are lexicographic.
    long long sum = n - 1;  // last position always set
    for (int p = 1; p <= n - 2; ++p)
        if ((mask >> (n - 2 - p)) & 1ULL) sum += p;
    return sum;
}

std::uint64_t mask_count(int n) { return 1ULL << (n - 2); }

void check_cap(const ProblemInstance& inst) {
    if (inst.n > kEnumerationCapN)
        throw CapacityError("enumeration: n=" + std::to_string(inst.n) + " above cap " +
                            std::to_string(kEnumerationCapN));
}

struct Candidate {
    double value;
    std::uint64_t mask;
};

// Sweep a mask sub-range; keeps every candidate within the tie tolerance
// of the running sub-range maximum (no candidate at global-max level can
// be pruned, because the running maximum never exceeds the global one).
void sweep_range(const ProblemInstance& inst, std::uint64_t lo, std::uint64_t hi,
                 std::vector<Candidate>& near_best, long long& feasible) {
    double running_max = -1.0;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (mask_edge_sum(inst.n, mask) != inst.m) continue;
        ++feasible;
        const CreationSequence seq = sequence_from_mask(inst.n, mask);
        const double value = spectral_radius(seq).lambda1;
        if (value > running_max) running_max = value;
        if (value >= running_max - kTieTol) near_best.push_back({value, mask});
    }
}

OracleResult finish(const ProblemInstance& inst, std::vector<Candidate> near_best,
                    long long feasible) {
    OracleResult out;
    out.feasible_count = feasible;
    double best = -1.0;
    for (const Candidate& c : near_best) best = std::max(best, c.value);
    out.optimum_value = best;
    std::vector<std::uint64_t> masks;
    for (const Candidate& c : near_best)
        if (c.value >= best - kTieTol) masks.push_back(c.mask);
    std::sort(masks.begin(), masks.end());
    out.argmax.reserve(masks.size());
    for (std::uint64_t mask : masks) out.argmax.push_back(sequence_from_mask(inst.n, mask));
    return out;
}

}  // namespace

CreationSequence sequence_from_mask(int n, std::uint64_t mask) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    bits.front() = 1;
    bits.back() = 1;
    for (int p = 1; p <= n - 2; ++p)
        bits[static_cast<std::size_t>(p)] =
            static_cast<std::uint8_t>((mask >> (n - 2 - p)) & 1ULL);
    return CreationSequence(std::move(bits));
}

FeasibleRange::FeasibleRange(const ProblemInstance& inst)
    : n_(inst.n), m_(inst.m), mask_count_(mask_count(inst.n)) {
    check_cap(inst);
}

FeasibleRange::iterator::iterator(int n, long long m, std::uint64_t mask, std::uint64_t end)
    : n_(n), m_(m), mask_(mask), end_(end) {
    settle();
}

void FeasibleRange::iterator::settle() {
    while (mask_ < end_ && mask_edge_sum(n_, mask_) != m_) ++mask_;
}

CreationSequence FeasibleRange::iterator::operator*() const {
    return sequence_from_mask(n_, mask_);
}

FeasibleRange::iterator& FeasibleRange::iterator::operator++() {
    ++mask_;
    settle();
    return *this;
}

FeasibleRange::iterator FeasibleRange::iterator::operator++(int) {
    iterator old = *this;
    ++*this;
    return old;
}

FeasibleRange::iterator FeasibleRange::begin() const {
    return iterator(n_, m_, 0, mask_count_);
}

FeasibleRange::iterator FeasibleRange::end() const {
    return iterator(n_, m_, mask_count_, mask_count_);
}

FeasibleRange enumerate_feasible(const ProblemInstance& inst) { return FeasibleRange(inst); }

long long feasible_count(const ProblemInstance& inst) {
    check_cap(inst);
    long long count = 0;
    const std::uint64_t total = mask_count(inst.n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (mask_edge_sum(inst.n, mask) == inst.m) ++count;
    return count;
}

OracleResult oracle_optimum_serial(const ProblemInstance& inst) {
    check_cap(inst);
    std::vector<Candidate> near_best;
    long long feasible = 0;
    sweep_range(inst, 0, mask_count(inst.n), near_best, feasible);
    return finish(inst, std::move(near_best), feasible);
}

OracleResult oracle_optimum(const ProblemInstance& inst) {
    check_cap(inst);

#ifdef _OPENMP
    const std::uint64_t total = mask_count(inst.n);
    const int max_threads = omp_get_max_threads();
    const int chunks = std::max(1, std::min<int>(max_threads, static_cast<int>(
                                    std::min<std::uint64_t>(total, 1ULL << 16))));
    std::vector<std::vector<Candidate>> near(static_cast<std::size_t>(chunks));
    std::vector<long long> counts(static_cast<std::size_t>(chunks), 0);
    std::exception_ptr error;

#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        try {
            const std::uint64_t lo = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
            const std::uint64_t hi = lo + total / chunks + (static_cast<std::uint64_t>(c) < total % chunks ? 1 : 0);
            sweep_range(inst, lo, hi, near[static_cast<std::size_t>(c)],
                        counts[static_cast<std::size_t>(c)]);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    std::vector<Candidate> merged;
    long long feasible = 0;
    for (int c = 0; c < chunks; ++c) {
        merged.insert(merged.end(), near[static_cast<std::size_t>(c)].begin(),
                      near[static_cast<std::size_t>(c)].end());
        feasible += counts[static_cast<std::size_t>(c)];
    }
    return finish(inst, std::move(merged), feasible);
#else
    return oracle_optimum_serial(inst);
#endif
}

}  // namespace tgs
