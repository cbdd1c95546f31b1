#include <doctest.h>

#include "stripcolor/errors.hpp"
#include "stripcolor/rational.hpp"

using namespace stripcolor;

TEST_CASE("rationals are kept canonical") {
    Rational r(6, 8);
    CHECK(r.str() == "3/4");
    CHECK(Rational(-6, 8).str() == "-3/4");
    CHECK(Rational(3, -4).str() == "-3/4");
    CHECK(Rational(0, 5).str() == "0/1");
}

TEST_CASE("parse round-trips and rejects junk") {
    for (const char* text : {"3/4", "-3/4", "0/1", "123456789012345678901234567891/2"}) {
        CHECK(Rational::parse(text).str() == text);
    }
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInputError);
    CHECK_THROWS_AS(Rational::parse(""), InvalidInputError);
    CHECK_THROWS_AS(Rational::parse("a/b"), InvalidInputError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), InvalidInputError);
    CHECK_THROWS_AS(Rational::parse("1.5"), InvalidInputError);
}

TEST_CASE("arithmetic and order") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(b < a);
    CHECK(-a < b);
    CHECK(midpoint(a, b) == Rational(1, 4));
    CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
    CHECK_THROWS_AS(a / Rational(0), InvalidInputError);
    CHECK(min(a, b) == b);
    CHECK(max(a, b) == a);
}
