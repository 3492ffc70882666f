#include <doctest.h>

#include <random>

#include "fpt/errors.hpp"
#include "fpt/exact_rational.hpp"
#include "test_support.hpp"

using fpt::ExactRational;
using fpt::OutputMode;
using fpt::test::q;

TEST_CASE("decimal, fraction and integer text parse exactly") {
    CHECK(q("0.4") == ExactRational(2, 5));
    CHECK(q(".2") == ExactRational(1, 5));
    CHECK(q("2/5") == ExactRational(2, 5));
    CHECK(q("-10/4") == ExactRational(-5, 2));
    CHECK(q("  7 ") == ExactRational(7));
    CHECK(q("1.5e-3") == ExactRational(3, 2000));
    CHECK(q("2E2") == ExactRational(200));
    CHECK(q("0.0186624") == ExactRational(186624, 10000000));
    CHECK(q("-0") == ExactRational());
    CHECK(q("5.") == ExactRational(5));
}

TEST_CASE("malformed numbers are rejected") {
    for (const char* bad : {"", "-", ".", "1/0", "abc", "1.2.3", "1/2/3", "0x10", "1e", "--1", "1 2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(ExactRational::parse(bad), fpt::ParseError);
    }
}

TEST_CASE("canonical representation") {
    const ExactRational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(ExactRational().denominator() == 1);
    CHECK_THROWS_AS(ExactRational(1, 0), fpt::MathError);
    CHECK_THROWS_AS(ExactRational(1) / ExactRational(), fpt::MathError);
}

TEST_CASE("rendering") {
    CHECK(q("0.0186624").to_string(OutputMode::decimal) == "0.0186624");
    CHECK(q("0.0186624").to_string(OutputMode::exact) == "1458/78125");
    CHECK(q("-5/2").to_string(OutputMode::decimal) == "-2.5");
    CHECK(q("3").to_string(OutputMode::decimal) == "3");
    CHECK(q("1/3").to_string(OutputMode::decimal) == "1/3 (≈0.333333333333)");
    CHECK(q("2/3").to_rounded_string(3) == "0.667");
    CHECK(q("-1/8").to_rounded_string(2) == "-0.13");
    CHECK(q("1/3").has_terminating_decimal() == false);
    CHECK(q("7/40").has_terminating_decimal());
    CHECK_THROWS_AS((void)q("1/3").to_decimal_string(), fpt::MathError);
}

TEST_CASE("printed values parse back to the same value") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const ExactRational r = fpt::test::random_rational(rng, 1000, 1000);
        CHECK(ExactRational::parse(r.to_string(OutputMode::exact)) == r);
        if (r.has_terminating_decimal()) CHECK(ExactRational::parse(r.to_decimal_string()) == r);
    }
}

TEST_CASE("field identities hold exactly on random operands") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        const ExactRational a = fpt::test::random_rational(rng, 50, 50);
        const ExactRational b = fpt::test::random_rational(rng, 50, 50);
        const ExactRational c = fpt::test::random_rational(rng, 50, 50);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == ExactRational());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}
