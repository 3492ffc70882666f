#include <doctest.h>

#include <random>

#include "fpt/errors.hpp"
#include "fpt/passage_oracle.hpp"
#include "fpt/pgf_solver.hpp"
#include "fpt/random_chain.hpp"
#include "test_support.hpp"

using fpt::ExactRational;
using fpt::Polynomial;
using fpt::RationalFunction;
using fpt::test::poly;
using fpt::test::q;

TEST_CASE("system for the example chain and target 3") {
    const auto sys = fpt::build_system(fpt::test::example_matrix(), 2);
    CHECK(sys.unknowns == std::vector<std::size_t>{0, 1});
    CHECK(sys.matrix[0][0] == poly({"1", "-0.2"}));
    CHECK(sys.matrix[0][1] == poly({"0", "-0.4"}));
    CHECK(sys.matrix[1][0] == poly({"0", "-0.3"}));
    CHECK(sys.matrix[1][1] == poly({"1", "-0.3"}));
    CHECK(sys.rhs[0] == poly({"0", "0.4"}));
    CHECK(sys.rhs[1] == poly({"0", "0.4"}));
}

TEST_CASE("scalar system for two states") {
    const auto m = fpt::test::matrix_of({{"1/3", "2/3"}, {"1", "0"}});
    const auto sys = fpt::build_system(m, 1);
    REQUIRE(sys.matrix.size() == 1);
    CHECK(sys.matrix[0][0] == poly({"1", "-1/3"}));
    CHECK(sys.rhs[0] == poly({"0", "2/3"}));
}

TEST_CASE("system structure and determinant on random chains") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 20; ++t) {
        const auto m = fpt::random_stochastic_matrix(rng, 5);
        const std::size_t j = rng() % 5;
        const auto sys = fpt::build_system(m, j);
        REQUIRE(sys.matrix.size() == 4);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                const Polynomial& e = sys.matrix[r][c];
                CHECK(e.degree() <= 1);
                CHECK(e.constant_term() == (r == c ? ExactRational(1) : ExactRational()));
            }
            CHECK(sys.rhs[r].constant_term().is_zero());
        }
        const auto sol = fpt::solve_fraction_free(sys);
        CHECK(sol.determinant.constant_term() == ExactRational(1));
        // substituting back: A * numerators == det * rhs
        for (std::size_t r = 0; r < 4; ++r) {
            Polynomial lhs;
            for (std::size_t c = 0; c < 4; ++c) lhs += sys.matrix[r][c] * sol.numerators[c];
            CHECK(lhs == sol.determinant * sys.rhs[r]);
        }
    }
}

TEST_CASE("example chain PGFs") {
    const auto m = fpt::test::example_matrix();
    const Polynomial det = poly({"1", "-0.5", "-0.06"});

    const auto p13 = fpt::solve_pgf(m, 0, 2);
    CHECK(p13.system_form.numerator == poly({"0", "0.4", "0.04"}));
    CHECK(p13.system_form.denominator == det);
    CHECK(p13.pgf == RationalFunction::normalize(poly({"0", "0.4", "0.04"}), det));
    CHECK(p13.reach_mass == ExactRational(1));
    CHECK_FALSE(p13.defective);

    const auto p33 = fpt::solve_pgf(m, 2, 2);
    CHECK(p33.system_form.numerator == poly({"0", "0.1", "0.31", "0.03"}));
    CHECK(p33.system_form.denominator == det);
    CHECK(p33.pgf == RationalFunction::normalize(poly({"0", "0.1", "0.31", "0.03"}), det));
    // reduced: z(0.1 + 0.3z) / (1 - 0.6z)
    CHECK(p33.pgf.numerator() == poly({"0", "0.1", "0.3"}));
    CHECK(p33.pgf.denominator() == poly({"1", "-0.6"}));

    const auto all = fpt::solve_pgf_all(m, 2);
    CHECK(all[1].system_form == p13.system_form);
}

TEST_CASE("deterministic one-step passage") {
    const auto m = fpt::test::matrix_of({{"0", "1"}, {"1", "0"}});
    const auto p = fpt::solve_pgf(m, 0, 1);
    CHECK(p.pgf == RationalFunction(Polynomial::z()));
    CHECK(fpt::solve_pgf(m, 1, 1).pgf == RationalFunction(Polynomial::monomial(ExactRational(1), 2)));
}

TEST_CASE("single absorbing state") {
    const auto m = fpt::test::matrix_of({{"1"}});
    const auto p = fpt::solve_pgf(m, 0, 0);
    CHECK(p.pgf == RationalFunction(Polynomial::z()));
    CHECK_FALSE(p.defective);
}

TEST_CASE("three-state closed form") {
    const auto m = fpt::test::example_matrix();
    const auto c13 = fpt::pgf_3state_closed_form(m, 0, 2);
    CHECK(c13.system_form.numerator == poly({"0", "0.4", "0.04"}));
    CHECK(c13.system_form.denominator == poly({"1", "-0.5", "-0.06"}));
    CHECK(c13.pgf == fpt::solve_pgf(m, 0, 2).pgf);

    const auto c23 = fpt::pgf_3state_closed_form(m, 1, 2);
    // 0.4z + (0.3*0.4 - 0.4*0.2) z^2 over 1 - (0.3 + 0.2) z + (0.3*0.2 - 0.3*0.4) z^2
    CHECK(c23.system_form.numerator == poly({"0", "0.4", "0.04"}));
    CHECK(c23.system_form.denominator == poly({"1", "-0.5", "-0.06"}));
    CHECK(c23.pgf == fpt::solve_pgf(m, 1, 2).pgf);

    CHECK_THROWS_AS(fpt::pgf_3state_closed_form(m, 1, 1), fpt::ArgumentError);
    CHECK_THROWS_AS(fpt::pgf_3state_closed_form(fpt::test::matrix_of({{"1"}}), 0, 0), fpt::ArgumentError);

    std::mt19937_64 rng(67);
    for (int t = 0; t < 30; ++t) {
        const auto r = fpt::random_stochastic_matrix(rng, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (i == j) continue;
                const auto closed = fpt::pgf_3state_closed_form(r, i, j);
                const auto solved = fpt::solve_pgf(r, i, j);
                CHECK(closed.pgf == solved.pgf);
                CHECK(closed.system_form == solved.system_form);
            }
        }
    }
}

TEST_CASE("solver series equals the recursion oracle, with structural invariants") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 6;
        const auto m = fpt::random_stochastic_matrix(rng, n);
        const std::size_t depth = 1 + rng() % 30;
        for (std::size_t j = 0; j < n; ++j) {
            const auto solved = fpt::solve_pgf_all(m, j);
            const auto oracle = fpt::first_passage_pmf_table(m, j, depth);
            const auto det = fpt::solve_fraction_free(fpt::build_system(m, j)).determinant;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& p = solved[i];
                const auto c = p.pgf.series(depth + 1);
                CHECK(c[0].is_zero());
                CHECK(p.pgf.numerator().constant_term().is_zero());
                CHECK(p.pgf.denominator().constant_term() == ExactRational(1));
                CHECK(std::vector<ExactRational>(c.begin() + 1, c.end()) == oracle[i].values);
                CHECK(fpt::divmod(det, p.pgf.denominator()).remainder.is_zero());
                // the reduced form has no pole at 1, and its value there is the reach mass
                const ExactRational at_one = p.pgf.evaluate(ExactRational(1));
                CHECK(at_one == p.reach_mass);
                CHECK(p.defective == (at_one < ExactRational(1)));
            }
        }
    }
}

TEST_CASE("reducible chain: unreachable target gives the zero PGF") {
    // state 1 absorbing; 3 can only be left towards 2 or stay
    const auto m = fpt::test::matrix_of({{"1", "0", "0"}, {"1/2", "1/4", "1/4"}, {"0", "1/2", "1/2"}});
    const auto p = fpt::solve_pgf(m, 0, 2);
    CHECK(p.pgf.is_zero());
    CHECK(p.defective);
    CHECK(p.reach_mass == ExactRational());
    const auto back = fpt::solve_pgf(m, 2, 2); // leaves for 2, from which 1 may absorb
    CHECK(back.defective);
    CHECK(back.pgf.evaluate(ExactRational(1)) == back.reach_mass);
}
