#include "psdrank/errors.hpp"
#include "psdrank/fixtures.hpp"
#include "psdrank/rationality.hpp"

#include "support/generators.hpp"
#include "support/suites.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace psdrank;
using namespace testsupport;

TEST_SUITE("square classes") {
    TEST_CASE("stated examples") {
        CHECK(square_class(Rational(2)) == 2);
        CHECK(square_class(Rational(4)) == 1);
        CHECK(square_class(Rational(1, 2)) == 2);
        CHECK(square_class(Rational(12)) == 3);
        CHECK(class_product(2, 2) == 1);
        CHECK(class_product(2, 3) == 6);
        CHECK(class_product(6, 10) == 15);
    }
}

TEST_SUITE("cycle_class") {
    TEST_CASE("the reference cycle has class 2") {
        const RatMatrix m = fixtures::cuboid_slack();
        // Rows 1,2 and columns 4,6: M14 * M26 / (M24 * M16) = 1/2.
        CHECK(cycle_class(m, {0, 1}, {3, 5}) == 2);
        // Editing M24 from 2 to 4 makes that cycle consistent again.
        RatMatrix edited = m;
        edited(1, 3) = 4;
        CHECK(cycle_class(edited, {0, 1}, {3, 5}) == 1);
    }

    TEST_CASE("malformed cycles are rejected") {
        const RatMatrix m = fixtures::cuboid_slack();
        CHECK_THROWS_AS(cycle_class(m, {0}, {3}), std::invalid_argument);
        CHECK_THROWS_AS(cycle_class(m, {0, 0}, {3, 5}), std::invalid_argument);
        CHECK_THROWS_AS(cycle_class(m, {0, 1}, {3, 5, 2}), std::invalid_argument);
        CHECK_THROWS_AS(cycle_class(m, {0, 1}, {3, 9}), std::invalid_argument);
        // (0,0) is a zero cell of the cuboid matrix.
        CHECK_THROWS_AS(cycle_class(m, {0, 1}, {0, 5}), std::invalid_argument);
    }

    TEST_CASE("validate_cycle checks the stored class") {
        const RatMatrix m = fixtures::cuboid_slack();
        CHECK(validate_cycle(m, CycleCertificate{{0, 1}, {3, 5}, 2}));
        CHECK_FALSE(validate_cycle(m, CycleCertificate{{0, 1}, {3, 5}, 1}));
        CHECK_FALSE(validate_cycle(m, CycleCertificate{{0, 1}, {3, 5}, 3}));
        CHECK_FALSE(validate_cycle(m, CycleCertificate{{0}, {3}, 2}));
    }
}

TEST_SUITE("diagonal_rationality_test") {
    TEST_CASE("all-ones is consistent") {
        RatMatrix ones(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) ones(i, j) = 1;
        const auto result = diagonal_rationality_test(ones);
        CHECK(result.consistent);
        CHECK(std::all_of(result.row_classes.begin(), result.row_classes.end(),
                          [](const Integer& c) { return c == 1; }));
        CHECK(std::all_of(result.col_classes.begin(), result.col_classes.end(),
                          [](const Integer& c) { return c == 1; }));
    }

    TEST_CASE("the documented 2x2 obstruction") {
        const RatMatrix m{{1, 1}, {2, 1}};
        const auto result = diagonal_rationality_test(m);
        REQUIRE_FALSE(result.consistent);
        REQUIRE(result.obstruction.has_value());
        CHECK(result.obstruction->alternating_class == 2);
        auto rows = result.obstruction->rows;
        auto cols = result.obstruction->cols;
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end());
        CHECK(rows == std::vector<std::size_t>{0, 1});
        CHECK(cols == std::vector<std::size_t>{0, 1});
        CHECK(validate_cycle(m, *result.obstruction));
    }

    TEST_CASE("the cuboid matrix is obstructed with class 2") {
        const auto result = diagonal_rationality_test(fixtures::cuboid_slack());
        REQUIRE_FALSE(result.consistent);
        REQUIRE(result.obstruction.has_value());
        CHECK(result.obstruction->alternating_class == 2);
        CHECK(validate_cycle(fixtures::cuboid_slack(), *result.obstruction));
    }

    TEST_CASE("consistency is sound: rescaled square roots are rational") {
        Rng rng(23);
        const Integer classes[] = {1, 2, 3, 6};
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t p = 2 + rng.below(3);
            const std::size_t q = 2 + rng.below(3);
            std::vector<Integer> chi(p), psi(q);
            for (auto& c : chi) c = classes[rng.below(4)];
            for (auto& c : psi) c = classes[rng.below(4)];
            RatMatrix m(p, q);
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = 0; j < q; ++j) {
                    const Rational square = random_positive_rational(rng, 9, 9);
                    m(i, j) = Rational(class_product(chi[i], psi[j])) * square * square;
                }

            const auto result = diagonal_rationality_test(m);
            REQUIRE(result.consistent);
            for (std::size_t i = 0; i < p; ++i) {
                for (std::size_t j = 0; j < q; ++j) {
                    const RadScalar rescaled = RadScalar::sqrt_of(Rational(result.row_classes[i])) *
                                               RadScalar::sqrt_of(m(i, j)) *
                                               RadScalar::sqrt_of(Rational(result.col_classes[j]));
                    CHECK(rad_is_rational(rescaled));
                }
            }
        }
    }

    TEST_CASE("outcome is invariant under permutation and square scaling") {
        Rng rng(29);
        const Rational choices[] = {Rational(1), Rational(2), Rational(4), Rational(8)};
        for (int trial = 0; trial < 30; ++trial) {
            RatMatrix m(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m(i, j) = choices[rng.below(4)];
            const bool base = diagonal_rationality_test(m).consistent;

            RatMatrix scaled = m;
            for (std::size_t j = 0; j < 3; ++j) scaled(1, j) *= Rational(25, 4);
            for (std::size_t i = 0; i < 3; ++i) scaled(i, 2) *= 9;
            CHECK(diagonal_rationality_test(scaled).consistent == base);

            RatMatrix permuted(3, 3);
            const std::size_t perm[] = {2, 0, 1};
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) permuted(perm[i], perm[j]) = m(i, j);
            CHECK(diagonal_rationality_test(permuted).consistent == base);
        }
    }

    TEST_CASE("components are analysed independently") {
        // Block diagonal support: each block carries its own classes.
        const RatMatrix m{{2, 0, 0}, {0, 3, 3}, {0, 3, 3}};
        const auto result = diagonal_rationality_test(m);
        CHECK(result.consistent);
        // An obstruction inside one block is still found.
        const RatMatrix bad{{2, 0, 0}, {0, 1, 1}, {0, 2, 1}};
        CHECK_FALSE(diagonal_rationality_test(bad).consistent);
    }

    TEST_CASE("agrees with exhaustive cycle search") {
        const SuiteResult result = diagonal_vs_cycles();
        INFO(result.detail);
        CHECK(result.ok);
    }
}

TEST_SUITE("irrationality certificate") {
    TEST_CASE("the cuboid matrix yields a validating certificate") {
        const RatMatrix m = fixtures::cuboid_slack();
        const auto cert = no_rational_factorization_certificate(m);
        REQUIRE(cert.has_value());
        CHECK(cert->size == 4);
        CHECK(cert->forced.covers_all(8, 6));
        CHECK(cert->obstruction.alternating_class == 2);
        CHECK(validate_certificate(m, *cert));
    }

    TEST_CASE("inconclusive cases return nothing") {
        CHECK_FALSE(no_rational_factorization_certificate(RatMatrix::identity(2)).has_value());
        RatMatrix ones(2, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1;
        CHECK_FALSE(no_rational_factorization_certificate(ones).has_value());
    }

    TEST_CASE("zero lines are rejected") {
        RatMatrix zero_row(2, 2);
        zero_row(0, 0) = 1;
        zero_row(0, 1) = 1;
        CHECK_THROWS_AS(no_rational_factorization_certificate(zero_row), ZeroLine);

        RatMatrix zero_col{{1, 0}, {1, 0}};
        CHECK_THROWS_AS(no_rational_factorization_certificate(zero_col), ZeroLine);
    }

    TEST_CASE("validation rejects tampered certificates") {
        const RatMatrix m = fixtures::cuboid_slack();
        const auto cert = no_rational_factorization_certificate(m);
        REQUIRE(cert.has_value());

        IrrationalityCertificate missing_witness = *cert;
        missing_witness.forced.row_witnesses.erase(3);
        CHECK_FALSE(validate_certificate(m, missing_witness));

        IrrationalityCertificate missing_row = *cert;
        missing_row.forced.forced_rows.erase(5);
        CHECK_FALSE(validate_certificate(m, missing_row));

        IrrationalityCertificate wrong_class = *cert;
        wrong_class.obstruction.alternating_class = 1;
        CHECK_FALSE(validate_certificate(m, wrong_class));

        IrrationalityCertificate wrong_size = *cert;
        wrong_size.size = 3;
        CHECK_FALSE(validate_certificate(m, wrong_size));
    }
}
