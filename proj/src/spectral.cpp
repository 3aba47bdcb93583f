#include "tgs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tgs {
namespace {

// y = A x without forming A: A[i][j] = bit[max(i,j)] for i != j, so
// y[i] = sum_{j>i} bit[j] x[j] + bit[i] * sum_{j<i} x[j].
void threshold_matvec(const std::vector<std::uint8_t>& bits, const std::vector<double>& x,
                      std::vector<double>& y) {
    const int n = static_cast<int>(bits.size());
    double suffix = 0.0;  // sum_{j>i} bit[j] x[j]
    for (int i = n - 1; i >= 0; --i) {
        y[static_cast<std::size_t>(i)] = suffix;
        if (bits[static_cast<std::size_t>(i)]) suffix += x[static_cast<std::size_t>(i)];
    }
    double prefix = 0.0;  // sum_{j<i} x[j]
    for (int i = 0; i < n; ++i) {
        if (bits[static_cast<std::size_t>(i)]) y[static_cast<std::size_t>(i)] += prefix;
        prefix += x[static_cast<std::size_t>(i)];
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void normalize(std::vector<double>& v) {
    const double norm = std::sqrt(dot(v, v));
    for (double& x : v) x /= norm;
}

struct PowerOutcome {
    double rho;
    std::vector<double> vec;
};

// Shifted power iteration on A (+I applied to the step only, so the
// Rayleigh quotient is the eigenvalue of A itself). The shift makes the
// operator primitive; without it the iteration stalls on bipartite
// graphs whose extreme eigenvalues share a modulus.
template <typename MatVec>
PowerOutcome power_iteration(int n, std::vector<double> x, MatVec&& matvec) {
    normalize(x);
    std::vector<double> y(static_cast<std::size_t>(n), 0.0);
    double rho_prev = 0.0;
    const long long cap = 100LL * std::max(n, 10);
    for (long long iter = 1; iter <= cap; ++iter) {
        matvec(x, y);
        const double rho = dot(x, y);
        if (iter > 1 && std::abs(rho - rho_prev) <= 1e-12 * (1.0 + std::abs(rho)))
            return {rho, std::move(x)};
        rho_prev = rho;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += x[i];
        normalize(y);
        x.swap(y);
    }
    throw std::runtime_error("power iteration failed to converge (internal error)");
}

std::vector<double> degree_start(const std::vector<std::uint8_t>& bits) {
    const int n = static_cast<int>(bits.size());
    std::vector<double> deg(static_cast<std::size_t>(n), 0.0);
    int later_ones = 0;
    for (int i = n - 1; i >= 0; --i) {
        deg[static_cast<std::size_t>(i)] =
            later_ones + (bits[static_cast<std::size_t>(i)] ? i : 0);
        if (bits[static_cast<std::size_t>(i)]) ++later_ones;
    }
    return deg;
}

}  // namespace

SpectralResult spectral_radius(const CreationSequence& seq) {
    const std::vector<std::uint8_t>& bits = seq.bits();
    PowerOutcome out = power_iteration(
        seq.size(), degree_start(bits),
        [&bits](const std::vector<double>& x, std::vector<double>& y) {
            threshold_matvec(bits, x, y);
        });
    SpectralResult r;
    r.lambda1 = out.rho;
    r.perron = std::move(out.vec);
    return r;
}

double spectral_radius_quotient(const CreationSequence& seq) {
    const Composition comp = to_composition(seq);
    const int k = static_cast<int>(comp.parts.size());
    // Symmetrized quotient of the run partition (which is equitable):
    // S[t][s] = sqrt(p_t p_s) when blocks t and s are fully joined
    // (i.e. the later block has type 1), S[t][t] = type_t * (p_t - 1).
    std::vector<double> S(static_cast<std::size_t>(k) * k, 0.0);
    for (int t = 0; t < k; ++t) {
        const double pt = comp.parts[static_cast<std::size_t>(t)];
        const int type_t = composition_block_type(k, t);
        S[static_cast<std::size_t>(t) * k + t] = type_t * (pt - 1.0);
        for (int s = t + 1; s < k; ++s) {
            if (composition_block_type(k, s) == 0) continue;  // later block isolated
            const double v = std::sqrt(pt * comp.parts[static_cast<std::size_t>(s)]);
            S[static_cast<std::size_t>(t) * k + s] = v;
            S[static_cast<std::size_t>(s) * k + t] = v;
        }
    }
    std::vector<double> start(static_cast<std::size_t>(k), 0.0);
    for (int t = 0; t < k; ++t)
        for (int s = 0; s < k; ++s) start[static_cast<std::size_t>(t)] += S[static_cast<std::size_t>(t) * k + s];
    if (k == 1) return S[0];
    PowerOutcome out = power_iteration(
        k, std::move(start), [&S, k](const std::vector<double>& x, std::vector<double>& y) {
            for (int t = 0; t < k; ++t) {
                double acc = 0.0;
                for (int s = 0; s < k; ++s) acc += S[static_cast<std::size_t>(t) * k + s] * x[static_cast<std::size_t>(s)];
                y[static_cast<std::size_t>(t)] = acc;
            }
        });
    return out.rho;
}

SpectralResult full_spectrum(const AdjacencyMatrix& a, int cap) {
    const int n = a.n();
    if (n > cap)
        throw CapacityError("full_spectrum: n=" + std::to_string(n) + " above cap " +
                            std::to_string(cap));
    std::vector<double> M(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M[static_cast<std::size_t>(i) * n + j] = a.at(i, j) ? 1.0 : 0.0;

    auto off_norm = [&M, n]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double v = M[static_cast<std::size_t>(i) * n + j];
                s += 2.0 * v * v;
            }
        return std::sqrt(s);
    };

    const double target = 1e-12 * off_norm();
    bool converged = target == 0.0;  // n == 1
    for (int sweep = 0; sweep < 60 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = M[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0) continue;
                const double app = M[static_cast<std::size_t>(p) * n + p];
                const double aqq = M[static_cast<std::size_t>(q) * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = M[static_cast<std::size_t>(i) * n + p];
                    const double aiq = M[static_cast<std::size_t>(i) * n + q];
                    M[static_cast<std::size_t>(i) * n + p] = c * aip - s * aiq;
                    M[static_cast<std::size_t>(p) * n + i] = c * aip - s * aiq;
                    M[static_cast<std::size_t>(i) * n + q] = s * aip + c * aiq;
                    M[static_cast<std::size_t>(q) * n + i] = s * aip + c * aiq;
                }
                M[static_cast<std::size_t>(p) * n + p] = app - t * apq;
                M[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
                M[static_cast<std::size_t>(p) * n + q] = 0.0;
                M[static_cast<std::size_t>(q) * n + p] = 0.0;
            }
        }
        converged = off_norm() <= target;
    }
    if (!converged)
        throw std::runtime_error("jacobi eigensolver failed to converge (internal error)");

    SpectralResult r;
    r.spectrum.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r.spectrum[static_cast<std::size_t>(i)] = M[static_cast<std::size_t>(i) * n + i];
    std::sort(r.spectrum.begin(), r.spectrum.end(), std::greater<double>());
    r.lambda1 = r.spectrum.front();

    if (n == 1 || a.edge_total() == 0) {
        r.perron.assign(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
        return r;
    }
    std::vector<double> start(static_cast<std::size_t>(n), 0.0);
    const std::vector<int> deg = a.degrees();
    for (int i = 0; i < n; ++i) start[static_cast<std::size_t>(i)] = deg[static_cast<std::size_t>(i)];
    PowerOutcome out = power_iteration(
        n, std::move(start), [&a, n](const std::vector<double>& x, std::vector<double>& y) {
            for (int i = 0; i < n; ++i) {
                double acc = 0.0;
                for (int j = 0; j < n; ++j)
                    if (a.at(i, j)) acc += x[static_cast<std::size_t>(j)];
                y[static_cast<std::size_t>(i)] = acc;
            }
        });
    r.perron = std::move(out.vec);
    return r;
}

}  // namespace tgs
