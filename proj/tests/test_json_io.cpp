#include "psdrank/errors.hpp"
#include "psdrank/fixtures.hpp"
#include "psdrank/json_io.hpp"
#include "psdrank/psdfact.hpp"
#include "psdrank/rationality.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace psdrank;
using namespace testsupport;

TEST_SUITE("json scalars") {
    TEST_CASE("rationals travel as strings, integers also accepted") {
        CHECK(io::rational_to_json(Rational(3, 2)) == io::json("3/2"));
        CHECK(io::rational_from_json(io::json("3/2")) == Rational(3, 2));
        CHECK(io::rational_from_json(io::json(-7)) == Rational(-7));
        CHECK(io::rational_from_json(io::json(7u)) == Rational(7));
        CHECK_THROWS_AS(io::rational_from_json(io::json(1.5)), ParseError);
        CHECK_THROWS_AS(io::rational_from_json(io::json("x")), ParseError);
    }

    TEST_CASE("radical scalars roundtrip") {
        Rng rng(71);
        const std::vector<Integer> radicands = {1, 2, 3, 5, 6, 10, 15, 30};
        for (int i = 0; i < 100; ++i) {
            const RadScalar a = random_radscalar(rng, radicands);
            CHECK(io::radscalar_from_json(io::radscalar_to_json(a)) == a);
        }
        CHECK_THROWS_AS(io::radscalar_from_json(io::json{{"coefficient", "1"}}), ParseError);
    }
}

TEST_SUITE("json matrices") {
    TEST_CASE("rational matrix roundtrip and shape validation") {
        const RatMatrix m = fixtures::cuboid_slack();
        const io::json j = io::matrix_to_json(m);
        CHECK(j["rows"] == 8);
        CHECK(j["cols"] == 6);
        CHECK(io::rat_matrix_from_json(j) == m);

        io::json bad = j;
        bad["entries"][0] = io::json::array({"1"});
        CHECK_THROWS_AS(io::rat_matrix_from_json(bad), ParseError);
        io::json missing = j;
        missing.erase("cols");
        CHECK_THROWS_AS(io::rat_matrix_from_json(missing), ParseError);
    }

    TEST_CASE("indices are 1-based in files") {
        const TriangularCertificate cert{{0, 4, 6, 7}, {0, 1, 4, 5}};
        const io::json j = io::triangular_to_json(cert);
        CHECK(j["rowIndices"] == io::json::array({1, 5, 7, 8}));
        CHECK(j["colIndices"] == io::json::array({1, 2, 5, 6}));
        CHECK(io::triangular_from_json(j) == cert);
        CHECK_THROWS_AS(
            io::triangular_from_json(io::json{{"rowIndices", {0}}, {"colIndices", {1}}}), ParseError);
    }
}

TEST_SUITE("json composites") {
    TEST_CASE("factorization roundtrip, exact and float") {
        const RatMatrix m = fixtures::cuboid_slack();
        const PsdFactorization f = factorization_from_sqrt(SqrtCandidate::nonnegative(m));
        const PsdFactorization back = io::factorization_from_json(io::factorization_to_json(f));
        CHECK(back.arithmetic == f.arithmetic);
        CHECK(back.size == f.size);
        CHECK(back.exact_row_factors == f.exact_row_factors);
        CHECK(back.exact_col_factors == f.exact_col_factors);
        CHECK(verify_factorization(m, back, 0.0).valid);

        PsdFactorization floaty;
        floaty.arithmetic = Arithmetic::float64;
        floaty.size = 1;
        floaty.float_row_factors = {DoubleMatrix{{1.25}}};
        floaty.float_col_factors = {DoubleMatrix{{0.5}}};
        const PsdFactorization fback = io::factorization_from_json(io::factorization_to_json(floaty));
        CHECK(fback.float_row_factors == floaty.float_row_factors);
        CHECK(fback.float_col_factors == floaty.float_col_factors);
    }

    TEST_CASE("certificate roundtrip") {
        const RatMatrix m = fixtures::cuboid_slack();
        const auto cert = no_rational_factorization_certificate(m);
        REQUIRE(cert.has_value());
        const IrrationalityCertificate back = io::certificate_from_json(io::certificate_to_json(*cert));
        CHECK(back.size == cert->size);
        CHECK(back.forced.forced_rows == cert->forced.forced_rows);
        CHECK(back.forced.forced_cols == cert->forced.forced_cols);
        CHECK(back.forced.row_witnesses == cert->forced.row_witnesses);
        CHECK(back.forced.col_witnesses == cert->forced.col_witnesses);
        CHECK(back.obstruction == cert->obstruction);
        CHECK(validate_certificate(m, back));
    }

    TEST_CASE("polytope roundtrip") {
        const Polytope p = fixtures::cuboid_polytope();
        const Polytope back = io::polytope_from_json(io::polytope_to_json(p));
        CHECK(back.dimension == p.dimension);
        CHECK(back.vertices == p.vertices);
    }

    TEST_CASE("builtin names resolve") {
        CHECK(io::load_matrix("builtin:cuboid") == fixtures::cuboid_slack());
        CHECK(io::load_polytope("builtin:cuboid").vertices == fixtures::cuboid_polytope().vertices);
        CHECK_THROWS_AS(io::load_matrix("builtin:unknown"), Error);
        CHECK_THROWS_AS(io::load_matrix("/nonexistent/path.json"), Error);
    }

    TEST_CASE("dump is stable") {
        const io::json j = io::matrix_to_json(fixtures::cuboid_slack());
        CHECK(io::dump(j) == io::dump(j));
        CHECK(io::dump(j).back() == '\n');
    }
}
