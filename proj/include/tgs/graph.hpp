#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgs {

// Raised when an input exceeds a hard size limit (e.g. exhaustive
// enumeration above the candidate cap). The CLI maps this to exit code 2.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A (n, m) search target. Connected threshold graphs exist exactly for
// n-1 <= m <= n(n-1)/2; the constructor rejects anything else.
struct ProblemInstance {
    int n;
    long long m;

    ProblemInstance(int n, long long m);

    long long min_edges() const { return n - 1; }
    long long max_edges() const { return static_cast<long long>(n) * (n - 1) / 2; }
};

// Binary creation sequence of a connected threshold graph.
//
// Positions are 0-based: setting bit p joins vertex p to every earlier
// vertex and contributes exactly p edges, so sum(p * bit[p]) == m.
// bit 0 carries no edges and is stored as 1 by convention; bit n-1 is 1
// because the last vertex must dominate for the graph to be connected.
// Both are immutable, the mutable range is [1, n-2].
class CreationSequence {
public:
    explicit CreationSequence(std::vector<std::uint8_t> bits);

    // Accepts space/comma separated bits, with or without surrounding
    // braces, e.g. "1 0 1 1", "{1, 0, 1, 1}". Throws std::invalid_argument
    // with the offending character offset.
    static CreationSequence parse(const std::string& text);

    int size() const { return static_cast<int>(bits_.size()); }
    std::uint8_t bit(int p) const { return bits_[static_cast<std::size_t>(p)]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    long long edge_count() const;
    int ones() const;

    std::string to_string() const;  // "1 0 1 1"

    friend bool operator==(const CreationSequence&, const CreationSequence&) = default;
    friend std::strong_ordering operator<=>(const CreationSequence& a,
                                            const CreationSequence& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
};

// Dense symmetric 0/1 adjacency matrix with zero diagonal.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(int n);

    int n() const { return n_; }
    bool at(int i, int j) const { return a_[idx(i, j)] != 0; }
    void add_edge(int i, int j);

    long long edge_total() const;
    std::vector<int> degrees() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<std::uint8_t> a_;
};

AdjacencyMatrix to_adjacency(const CreationSequence& seq);

// True iff the degree-sorted matrix (non-increasing degree, index as
// tie-break) has the staircase property: entry (i,j)=1 with i<j forces
// every (h,k)=1 for h<=i, k<=j, h<k.
bool is_stepwise(const AdjacencyMatrix& a);

// True iff some 4-vertex subset induces P4, C4 or 2K2. O(n^4) scan.
bool has_forbidden_induced(const AdjacencyMatrix& a);

// Run-length view of a sequence: part sizes p_1..p_k with sum n.
// Position 0 is merged into the first run regardless of its stored bit;
// the last part always covers the trailing 1s.
struct Composition {
    std::vector<int> parts;

    friend bool operator==(const Composition&, const Composition&) = default;
};

Composition to_composition(const CreationSequence& seq);
CreationSequence composition_to_sequence(const Composition& c);

// Block bit value of part j (0-based) in a k-part composition: the last
// part is joined (type 1) and types alternate towards the front.
inline int composition_block_type(int k, int j) { return (k - 1 - j) % 2 == 0 ? 1 : 0; }

std::string to_string(const Composition& c);  // "(3,1,1,1,1,1)"

}  // namespace tgs
