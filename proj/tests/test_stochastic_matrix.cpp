#include <doctest.h>

#include <random>

#include "fpt/errors.hpp"
#include "fpt/random_chain.hpp"
#include "fpt/stochastic_matrix.hpp"
#include "test_support.hpp"

using fpt::ExactRational;
using fpt::MatrixFormat;
using fpt::StochasticMatrix;
using fpt::test::q;

TEST_CASE("csv example matrix") {
    const StochasticMatrix m = fpt::parse_matrix(".2,.4,.4\n.3,.3,.4\n.5,.4,.1\n", MatrixFormat::csv);
    CHECK(m.size() == 3);
    CHECK(m(0, 0) == ExactRational(1, 5));
    CHECK(m(2, 2) == ExactRational(1, 10));
    CHECK_FALSE(m.rows_normalized());
    CHECK(m.state_name(1) == "2");
}

TEST_CASE("degenerate and malformed grids") {
    const StochasticMatrix one = fpt::parse_matrix("1\n", MatrixFormat::csv);
    CHECK(one.size() == 1);
    CHECK(one(0, 0) == ExactRational(1));

    CHECK_THROWS_WITH_AS(fpt::parse_matrix(".2,.4,.3\n.3,.3,.4\n.5,.4,.1\n", MatrixFormat::csv),
                         "row 1 sums to 9/10, expected 1", fpt::ParseError);
    CHECK_THROWS_WITH_AS(fpt::parse_matrix("1,0\n1\n", MatrixFormat::csv),
                         "non-square matrix: row 2 has 1 entries, expected 2", fpt::ParseError);
    CHECK_THROWS_WITH_AS(fpt::parse_matrix("3/2,-1/2\n0,1\n", MatrixFormat::csv),
                         "entry (1,1) = 3/2 is outside [0,1]", fpt::ParseError);
    CHECK_THROWS_AS(fpt::parse_matrix("", MatrixFormat::csv), fpt::ParseError);
    CHECK_THROWS_AS(fpt::parse_matrix("0.5,abc\n", MatrixFormat::csv), fpt::ParseError);
    CHECK_THROWS_AS(fpt::parse_matrix("0.5,\n", MatrixFormat::csv), fpt::ParseError);
}

TEST_CASE("whitespace grid with comments and fractions") {
    const StochasticMatrix m =
        fpt::parse_matrix("# two-state\n\n 1/2   1/2\n1 0\n", MatrixFormat::whitespace);
    CHECK(m.size() == 2);
    CHECK(m(1, 0) == ExactRational(1));
}

TEST_CASE("json keeps decimal literals exact") {
    const StochasticMatrix m = fpt::parse_matrix(
        R"({"n": 3, "rows": [[0.2, 0.4, 0.4], ["3/10", 0.3, 0.4], [0.5, 0.4, 0.1]], "labels": ["a", "b", "c"]})",
        MatrixFormat::json);
    CHECK_FALSE(m == fpt::test::example_matrix()); // labels differ
    CHECK(m(1, 0) == ExactRational(3, 10));
    CHECK(m(2, 2) == ExactRational(1, 10));
    CHECK(m.labels().size() == 3);
    CHECK(m.resolve_state("b") == 1);
    CHECK(m.resolve_state("3") == 2);
    CHECK(m.state_name(0) == "a");

    const StochasticMatrix ints = fpt::parse_matrix(R"({"rows": [[0, 1], [1, 0]]})", MatrixFormat::json);
    CHECK(ints(0, 1) == ExactRational(1));

    CHECK_THROWS_AS(fpt::parse_matrix(R"({"n": 3, "rows": [[1]]})", MatrixFormat::json), fpt::ParseError);
    CHECK_THROWS_AS(fpt::parse_matrix(R"({"rows": [[1]], "labels": ["x", "y"]})", MatrixFormat::json),
                    fpt::ParseError);
    CHECK_THROWS_AS(fpt::parse_matrix(R"({"rows": [[true]]})", MatrixFormat::json), fpt::ParseError);
    CHECK_THROWS_AS(fpt::parse_matrix(R"({"rows": [[1]])", MatrixFormat::json), fpt::ParseError);
    CHECK_THROWS_AS(fpt::parse_matrix(R"([[1]])", MatrixFormat::json), fpt::ParseError);
    CHECK_THROWS_AS(fpt::parse_matrix(R"({"rows": [[0.5, 0.5], [0.5, 0.5]], "labels": ["x", "x"]})",
                                      MatrixFormat::json),
                    fpt::ParseError);
}

TEST_CASE("row normalization is opt-in and recorded") {
    CHECK_THROWS_AS(fpt::parse_matrix("0.3,0.3\n0.5,0.5\n", MatrixFormat::csv), fpt::ParseError);
    const StochasticMatrix m = fpt::parse_matrix("0.3,0.3\n0.5,0.5\n", MatrixFormat::csv, true);
    CHECK(m.rows_normalized());
    CHECK(m(0, 0) == ExactRational(1, 2));
    CHECK(m(1, 1) == ExactRational(1, 2));
    CHECK_THROWS_AS(fpt::parse_matrix("0,0\n0.5,0.5\n", MatrixFormat::csv, true), fpt::ParseError);
    CHECK_FALSE(fpt::parse_matrix("0.5,0.5\n0.5,0.5\n", MatrixFormat::csv, true).rows_normalized());
}

TEST_CASE("state resolution is 1-based") {
    const StochasticMatrix m = fpt::test::example_matrix();
    CHECK(m.resolve_state("1") == 0);
    CHECK(m.resolve_state(" 3 ") == 2);
    CHECK_THROWS_WITH_AS((void)m.resolve_state("4"), "state 4 out of range 1..3", fpt::IndexError);
    CHECK_THROWS_AS((void)m.resolve_state("0"), fpt::IndexError);
    CHECK_THROWS_AS((void)m.resolve_state("x"), fpt::IndexError);
    CHECK_THROWS_AS(m.check_state(3), fpt::IndexError);
}

TEST_CASE("format guessing") {
    CHECK(fpt::guess_format("m.json", "") == MatrixFormat::json);
    CHECK(fpt::guess_format("m.csv", "1 0\n0 1") == MatrixFormat::csv);
    CHECK(fpt::guess_format("m.txt", " {\"rows\": []}") == MatrixFormat::json);
    CHECK(fpt::guess_format("m.txt", "# a, comment\n1 0\n0 1\n") == MatrixFormat::whitespace);
    CHECK(fpt::guess_format("-", "0.5,0.5\n0.5,0.5\n") == MatrixFormat::csv);
}

TEST_CASE("parse then render then parse is the identity") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 30; ++t) {
        const StochasticMatrix m = fpt::random_stochastic_matrix(rng, 1 + rng() % 6);
        for (auto fmt : {MatrixFormat::csv, MatrixFormat::whitespace, MatrixFormat::json}) {
            const StochasticMatrix back = fpt::parse_matrix(fpt::render_matrix(m, fmt), fmt);
            CHECK(back == m);
            CHECK(fpt::render_matrix(back, fmt) == fpt::render_matrix(m, fmt));
        }
    }
}

TEST_CASE("random chains are valid and seeded") {
    std::mt19937_64 a(99);
    std::mt19937_64 b(99);
    for (int t = 0; t < 20; ++t) {
        const auto n = 2 + t % 5;
        const StochasticMatrix ma = fpt::random_stochastic_matrix(a, n, true);
        CHECK(ma == fpt::random_stochastic_matrix(b, n, true));
        CHECK(fpt::is_irreducible(ma));
    }
    CHECK_FALSE(fpt::is_irreducible(fpt::test::matrix_of({{"1", "0"}, {"1/2", "1/2"}})));
}
