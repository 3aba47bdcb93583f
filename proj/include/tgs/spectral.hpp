#pragma once

#include <vector>

#include "tgs/graph.hpp"

namespace tgs {

struct SpectralResult {
    double lambda1 = 0.0;
    // Unit-norm dominant eigenvector; entrywise positive for connected input.
    std::vector<double> perron;
    // Full eigenvalue list, non-increasing; only filled by full_spectrum.
    std::vector<double> spectrum;
};

// Dominant eigenvalue of the adjacency matrix by shifted power iteration
// (the +I shift keeps the iteration convergent on bipartite members such
// as the star, whose extreme eigenvalues have equal modulus). Start
// vector is the normalized degree vector; convergence when successive
// Rayleigh quotients differ by <= 1e-12 * (1 + |rho|). The matrix is
// never formed: one multiply costs O(n) using prefix/suffix sums over
// the sequence. Throws std::runtime_error if 100*n multiplies do not
// converge (cannot happen for valid input).
SpectralResult spectral_radius(const CreationSequence& seq);

// All n eigenvalues via cyclic Jacobi rotations; stops once the
// off-diagonal Frobenius norm drops below 1e-12 of its initial value.
// Perron vector comes from the same power iteration as spectral_radius.
SpectralResult full_spectrum(const AdjacencyMatrix& a, int cap = 512);

// Same dominant eigenvalue, computed on the k x k symmetrized quotient
// of the equitable partition induced by the composition blocks. Much
// cheaper than the full matrix when the sequence has few runs.
double spectral_radius_quotient(const CreationSequence& seq);

}  // namespace tgs
