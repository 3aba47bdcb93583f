#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tgs/graph.hpp"
#include "tgs/rng.hpp"
#include "tgs/spectral.hpp"

using tgs::AdjacencyMatrix;
using tgs::CreationSequence;
using tgs::SpectralResult;

namespace {

CreationSequence seq(std::vector<std::uint8_t> bits) {
    return CreationSequence(std::move(bits));
}

CreationSequence ones_sequence(int n) {
    return seq(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1));
}

CreationSequence star_sequence(int n) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    bits.front() = 1;
    bits.back() = 1;
    return seq(std::move(bits));
}

CreationSequence random_sequence(int n, tgs::RandomStream& rng) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    bits.front() = 1;
    bits.back() = 1;
    for (int p = 1; p <= n - 2; ++p)
        bits[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(rng.below(2));
    return seq(std::move(bits));
}

}  // namespace

TEST_CASE("complete graphs are exact") {
    for (int n = 2; n <= 64; ++n) {
        const SpectralResult r = spectral_radius(ones_sequence(n));
        CHECK(std::abs(r.lambda1 - (n - 1)) <= 1e-10);
        CHECK(std::abs(spectral_radius_quotient(ones_sequence(n)) - (n - 1)) <= 1e-10);
    }
}

TEST_CASE("stars match the closed form") {
    for (int n = 3; n <= 64; ++n) {
        const double expected = std::sqrt(static_cast<double>(n - 1));
        CHECK(std::abs(spectral_radius(star_sequence(n)).lambda1 - expected) <= 1e-9);
        CHECK(std::abs(spectral_radius_quotient(star_sequence(n)) - expected) <= 1e-9);
    }
}

TEST_CASE("the 8-vertex example value") {
    // Dominant eigenvalue of the displayed matrix, cross-checked against
    // an independent dense eigensolver.
    const CreationSequence s = seq({1, 0, 0, 1, 0, 1, 0, 1});
    CHECK(spectral_radius(s).lambda1 == doctest::Approx(4.425521843020214).epsilon(1e-9));
    CHECK(spectral_radius_quotient(s) == doctest::Approx(4.425521843020214).epsilon(1e-9));
    CHECK(full_spectrum(to_adjacency(s)).lambda1 ==
          doctest::Approx(4.425521843020214).epsilon(1e-9));
}

TEST_CASE("small spectra") {
    const SpectralResult k2 = full_spectrum(to_adjacency(seq({1, 1})));
    REQUIRE(k2.spectrum.size() == 2);
    CHECK(k2.spectrum[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(k2.spectrum[1] == doctest::Approx(-1.0).epsilon(1e-10));

    const SpectralResult k6 = full_spectrum(to_adjacency(ones_sequence(6)));
    REQUIRE(k6.spectrum.size() == 6);
    CHECK(k6.spectrum[0] == doctest::Approx(5.0).epsilon(1e-10));
    for (int i = 1; i < 6; ++i)
        CHECK(k6.spectrum[static_cast<std::size_t>(i)] == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("trace identities on the 8-vertex example") {
    const SpectralResult r = full_spectrum(to_adjacency(seq({1, 0, 0, 1, 0, 1, 0, 1})));
    double sum = 0.0, sum_sq = 0.0;
    for (double ev : r.spectrum) {
        sum += ev;
        sum_sq += ev * ev;
    }
    CHECK(std::abs(sum) <= 1e-8 * 8);
    CHECK(std::abs(sum_sq - 30.0) <= 1e-8 * 8);
    for (std::size_t i = 1; i < r.spectrum.size(); ++i)
        CHECK(r.spectrum[i - 1] >= r.spectrum[i]);
}

TEST_CASE("three routes agree on random sequences") {
    tgs::RandomStream rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(38));
        const CreationSequence s = random_sequence(n, rng);
        const double power = spectral_radius(s).lambda1;
        const double quotient = spectral_radius_quotient(s);
        const double jacobi = full_spectrum(to_adjacency(s)).lambda1;
        CHECK(std::abs(power - quotient) <= 1e-9);
        CHECK(std::abs(power - jacobi) <= 1e-8);
    }
    // quotient route alone up to the full-matrix threshold
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 40 + static_cast<int>(rng.below(25));
        const CreationSequence s = random_sequence(n, rng);
        CHECK(std::abs(spectral_radius(s).lambda1 - spectral_radius_quotient(s)) <= 1e-9);
    }
}

TEST_CASE("bounds and Perron vector") {
    tgs::RandomStream rng(19);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(40));
        const CreationSequence s = random_sequence(n, rng);
        const SpectralResult r = spectral_radius(s);
        const double m = static_cast<double>(s.edge_count());
        CHECK(r.lambda1 >= 2.0 * m / n - 1e-9);
        CHECK(r.lambda1 <= n - 1 + 1e-9);
        REQUIRE(static_cast<int>(r.perron.size()) == n);
        double norm = 0.0, min_entry = 1.0;
        for (double x : r.perron) {
            norm += x * x;
            min_entry = std::min(min_entry, x);
        }
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(min_entry > 0.0);
    }
}

TEST_CASE("adding a dominating bit strictly increases the radius") {
    tgs::RandomStream rng(23);
    int tested = 0;
    while (tested < 60) {
        const int n = 4 + static_cast<int>(rng.below(30));
        const CreationSequence s = random_sequence(n, rng);
        std::vector<int> zeros;
        for (int p = 1; p <= n - 2; ++p)
            if (!s.bit(p)) zeros.push_back(p);
        if (zeros.empty()) continue;
        std::vector<std::uint8_t> bits = s.bits();
        bits[static_cast<std::size_t>(zeros[static_cast<std::size_t>(
            rng.below(zeros.size()))])] = 1;
        const CreationSequence flipped = CreationSequence(std::move(bits));
        CHECK(spectral_radius(flipped).lambda1 > spectral_radius(s).lambda1);
        ++tested;
    }
}

TEST_CASE("full_spectrum size cap") {
    const CreationSequence s = ones_sequence(8);
    CHECK_THROWS_AS(full_spectrum(to_adjacency(s), 4), tgs::CapacityError);
}
