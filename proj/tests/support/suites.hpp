#pragma once

// The four randomized property suites shared between the unit tests and the
// acceptance binary. Each runs a fixed number of deterministic instances and
// reports the first failure.

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include "psdrank/bounds.hpp"
#include "psdrank/psdfact.hpp"
#include "psdrank/rationality.hpp"

#include <sstream>
#include <string>

namespace testsupport {

struct SuiteResult {
    bool ok = true;
    std::string detail;
};

inline const std::vector<Integer> kSuiteRadicands = {1, 2, 3, 5, 6, 10, 15, 30};

/// Field axioms on RadScalar: associativity of + and *, distributivity, and
/// a * inv(a) = 1; plus pure-radical squares landing in the rationals.
inline SuiteResult radscalar_field_axioms(std::size_t count = 1000, std::uint64_t seed = 2024) {
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const RadScalar a = random_radscalar(rng, kSuiteRadicands);
        const RadScalar b = random_radscalar(rng, kSuiteRadicands);
        const RadScalar c = random_radscalar(rng, kSuiteRadicands);
        if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c))) {
            return {false, "associativity failed at instance " + std::to_string(i)};
        }
        if (!(a * (b + c) == a * b + a * c)) {
            return {false, "distributivity failed at instance " + std::to_string(i)};
        }
        const RadScalar nz = random_nonzero_radscalar(rng, kSuiteRadicands);
        if (!(nz * nz.inverse() == RadScalar(1))) {
            return {false, "a * inv(a) != 1 at instance " + std::to_string(i) + " for " + nz.str()};
        }
        const Integer s = kSuiteRadicands[rng.below(kSuiteRadicands.size())];
        const RadScalar pure = RadScalar::radical(random_nonzero_rational(rng), s);
        const RadScalar square = pure * pure;
        if (!square.is_rational() || square.rational_value() <= 0) {
            return {false, "square of a pure radical is not a positive rational at instance " +
                               std::to_string(i)};
        }
    }
    return {};
}

/// rational_direction roundtrip on rank-one rational psd matrices.
inline SuiteResult rankone_roundtrip(std::size_t count = 1000, std::uint64_t seed = 77) {
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + rng.below(6);
        const Rational lambda = random_positive_rational(rng, 20, 20);
        std::vector<Rational> q = random_vector(rng, n);
        if (rng.chance(5)) q.assign(n, Rational(0));
        RatMatrix a = psdrank::phi(q);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) a(r, c) *= lambda;

        const psdrank::RankOneDecomposition d = psdrank::rational_direction(a);
        RatMatrix rebuilt = psdrank::phi(d.direction);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) rebuilt(r, c) *= d.scale;
        if (!(rebuilt == a)) return {false, "roundtrip failed at instance " + std::to_string(i)};
    }
    return {};
}

/// Greedy triangularity decision against the all-permutations oracle on
/// random 0/1 matrices; greedy certificates must also validate.
inline SuiteResult triangular_vs_bruteforce(std::size_t count = 200, std::uint64_t seed = 5150,
                                            std::size_t size = 5) {
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const unsigned density = 20 + static_cast<unsigned>(rng.below(61));
        const RatMatrix m = random_zero_one_matrix(rng, size, size, density);
        const auto greedy = psdrank::is_triangular(m);
        const bool brute = triangular_bruteforce(m);
        if (greedy.has_value() != brute) {
            return {false, "greedy and brute force disagree at instance " + std::to_string(i)};
        }
        if (greedy && !psdrank::validate_triangular(m, *greedy)) {
            return {false, "greedy certificate failed validation at instance " + std::to_string(i)};
        }
    }
    return {};
}

/// Spanning-tree diagonal-rationality test against exhaustive cycle
/// enumeration on random matrices with entries in {1, 2, 4, 8}.
inline SuiteResult diagonal_vs_cycles(std::size_t count = 200, std::uint64_t seed = 31337,
                                      std::size_t size = 4) {
    Rng rng(seed);
    const Rational choices[] = {Rational(1), Rational(2), Rational(4), Rational(8)};
    for (std::size_t i = 0; i < count; ++i) {
        RatMatrix m(size, size);
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c) m(r, c) = choices[rng.below(4)];

        const psdrank::DiagonalRationality result = psdrank::diagonal_rationality_test(m);
        const auto cycle = nontrivial_cycle_bruteforce(m);
        if (result.consistent == cycle.has_value()) {
            std::ostringstream msg;
            msg << "test says " << (result.consistent ? "consistent" : "obstructed")
                << " but exhaustive search " << (cycle ? "found a cycle" : "found none")
                << " at instance " << i;
            return {false, msg.str()};
        }
        if (result.obstruction && !psdrank::validate_cycle(m, *result.obstruction)) {
            return {false, "returned cycle failed validation at instance " + std::to_string(i)};
        }
    }
    return {};
}

}  // namespace testsupport
