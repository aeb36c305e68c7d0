#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fiberosc/rational.hpp"

using namespace fiberosc;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 6).fraction_str() == "1/3");
    CHECK(Rational(3).fraction_str() == "3/1");
    CHECK(Rational(-1, 3).fraction_str() == "-1/3");
    CHECK(Rational(0).fraction_str() == "0/1");
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse("-2/4") == Rational(-1, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("+7/2") == Rational(7, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("--2"), ParseError);
}

TEST_CASE("exact field operations") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(1, 3).reciprocal() == Rational(3));
    CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
    CHECK((-Rational(1, 2)).abs() == Rational(1, 2));
}

TEST_CASE("total order") {
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 7) == Rational(1));
    CHECK(min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
    CHECK(max(Rational(1, 3), Rational(1, 4)) == Rational(1, 3));
}

TEST_CASE("ceiling") {
    CHECK(Rational(5, 2).ceil_long() == 3);
    CHECK(Rational(-5, 2).ceil_long() == -2);
    CHECK(Rational(4).ceil_long() == 4);
    CHECK(Rational(1, 3).reciprocal().ceil_long() == 3);
}

TEST_CASE("no overflow on long chains") {
    Rational x(1, 3);
    for (int i = 0; i < 200; ++i) x = x * Rational(3, 2) + Rational(1, 7);
    Rational y = x;
    for (int i = 0; i < 200; ++i) y = (y - Rational(1, 7)) / Rational(3, 2);
    CHECK(y == Rational(1, 3));
}
