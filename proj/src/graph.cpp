#include "tgs/graph.hpp"

#include <algorithm>
#include <numeric>

namespace tgs {

ProblemInstance::ProblemInstance(int n_in, long long m_in) : n(n_in), m(m_in) {
    if (n < 2) throw std::invalid_argument("instance: need at least 2 vertices");
    if (m < min_edges() || m > max_edges())
        throw std::invalid_argument("instance: m=" + std::to_string(m) +
                                    " outside [" + std::to_string(min_edges()) + ", " +
                                    std::to_string(max_edges()) + "] for n=" +
                                    std::to_string(n));
}

CreationSequence::CreationSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.size() < 2) throw std::invalid_argument("sequence: need at least 2 bits");
    for (std::uint8_t b : bits_)
        if (b > 1) throw std::invalid_argument("sequence: bits must be 0 or 1");
    if (bits_.back() != 1)
        throw std::invalid_argument("sequence: last bit must be 1 (disconnected graph)");
    bits_.front() = 1;  // position 0 carries no edges; stored as 1 by convention
}

CreationSequence CreationSequence::parse(const std::string& text) {
    std::vector<std::uint8_t> bits;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ',' ||
            ch == '{' || ch == '}' || ch == '(' || ch == ')' || ch == '[' || ch == ']')
            continue;
        if (ch == '0' || ch == '1') {
            bits.push_back(static_cast<std::uint8_t>(ch - '0'));
            continue;
        }
        throw std::invalid_argument("sequence parse error at offset " + std::to_string(i) +
                                    ": unexpected character '" + std::string(1, ch) + "'");
    }
    if (bits.size() < 2)
        throw std::invalid_argument("sequence parse error: need at least 2 bits");
    return CreationSequence(std::move(bits));
}

long long CreationSequence::edge_count() const {
    long long sum = 0;
    for (std::size_t p = 0; p < bits_.size(); ++p)
        if (bits_[p]) sum += static_cast<long long>(p);
    return sum;
}

int CreationSequence::ones() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string CreationSequence::to_string() const {
    std::string out;
    out.reserve(bits_.size() * 2);
    for (std::size_t p = 0; p < bits_.size(); ++p) {
        if (p) out.push_back(' ');
        out.push_back(static_cast<char>('0' + bits_[p]));
    }
    return out;
}

AdjacencyMatrix::AdjacencyMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("adjacency: need at least 1 vertex");
}

void AdjacencyMatrix::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("adjacency: no self-loops");
    a_[idx(i, j)] = 1;
    a_[idx(j, i)] = 1;
}

long long AdjacencyMatrix::edge_total() const {
    long long twice = 0;
    for (std::uint8_t v : a_) twice += v;
    return twice / 2;
}

std::vector<int> AdjacencyMatrix::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j)) ++deg[static_cast<std::size_t>(i)];
    return deg;
}

AdjacencyMatrix to_adjacency(const CreationSequence& seq) {
    const int n = seq.size();
    AdjacencyMatrix a(n);
    for (int j = 1; j < n; ++j)
        if (seq.bit(j))
            for (int i = 0; i < j; ++i) a.add_edge(i, j);
    return a;
}

bool is_stepwise(const AdjacencyMatrix& a) {
    const int n = a.n();
    const std::vector<int> deg = a.degrees();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&deg](int x, int y) { return deg[static_cast<std::size_t>(x)] >
                                                   deg[static_cast<std::size_t>(y)]; });
    // Local closure is equivalent to the full staircase condition: any
    // (h,k) below-left of a set (i,j) is reachable by unit steps.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!a.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
                continue;
            if (j - 1 > i &&
                !a.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j - 1)]))
                return false;
            if (i - 1 >= 0 &&
                !a.at(order[static_cast<std::size_t>(i - 1)], order[static_cast<std::size_t>(j)]))
                return false;
        }
    }
    return true;
}

bool has_forbidden_induced(const AdjacencyMatrix& a) {
    const int n = a.n();
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    const int v[4] = {p, q, r, s};
                    int edges = 0;
                    int deg[4] = {0, 0, 0, 0};
                    for (int x = 0; x < 4; ++x)
                        for (int y = x + 1; y < 4; ++y)
                            if (a.at(v[x], v[y])) {
                                ++edges;
                                ++deg[x];
                                ++deg[y];
                            }
                    if (edges == 2) {
                        // two edges with all degrees 1 = 2K2
                        if (deg[0] == 1 && deg[1] == 1 && deg[2] == 1 && deg[3] == 1)
                            return true;
                    } else if (edges == 3) {
                        // three edges, degrees (2,2,1,1) = P4 (the other
                        // 3-edge graphs are the claw and K3+K1)
                        if (std::max({deg[0], deg[1], deg[2], deg[3]}) == 2 &&
                            std::min({deg[0], deg[1], deg[2], deg[3]}) == 1)
                            return true;
                    } else if (edges == 4) {
                        // four edges, 2-regular = C4
                        if (deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
                            return true;
                    }
                }
    return false;
}

Composition to_composition(const CreationSequence& seq) {
    const int n = seq.size();
    Composition c;
    // Position 0 joins whatever run position 1 starts.
    int run_val = n > 1 ? seq.bit(1) : 1;
    int run_len = n > 1 ? 2 : 1;
    for (int p = 2; p < n; ++p) {
        if (seq.bit(p) == run_val) {
            ++run_len;
        } else {
            c.parts.push_back(run_len);
            run_val = seq.bit(p);
            run_len = 1;
        }
    }
    c.parts.push_back(run_len);
    return c;
}

CreationSequence composition_to_sequence(const Composition& c) {
    const int k = static_cast<int>(c.parts.size());
    if (k == 0) throw std::invalid_argument("composition: empty");
    std::vector<std::uint8_t> bits;
    for (int j = 0; j < k; ++j) {
        if (c.parts[static_cast<std::size_t>(j)] < 1)
            throw std::invalid_argument("composition: parts must be positive");
        const std::uint8_t t = static_cast<std::uint8_t>(composition_block_type(k, j));
        bits.insert(bits.end(), static_cast<std::size_t>(c.parts[static_cast<std::size_t>(j)]), t);
    }
    if (bits.size() < 2) throw std::invalid_argument("composition: sums to fewer than 2 vertices");
    bits.front() = 1;
    return CreationSequence(std::move(bits));
}

std::string to_string(const Composition& c) {
    std::string out = "(";
    for (std::size_t j = 0; j < c.parts.size(); ++j) {
        if (j) out.push_back(',');
        out += std::to_string(c.parts[j]);
    }
    out.push_back(')');
    return out;
}

}  // namespace tgs
