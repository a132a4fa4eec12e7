#include "doctest.h"

#include "raagpl/errors.hpp"
#include "raagpl/rational.hpp"

using namespace raagpl;

TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("123456789123456789/987654321987654321") ==
          Rational(BigInt("123456789123456789"), BigInt("987654321987654321")));
}

TEST_CASE("parse_rational rejects malformed text") {
    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("1/-2"), input_error);
    CHECK_THROWS_AS(parse_rational("1.5"), input_error);
    CHECK_THROWS_AS(parse_rational(" 1"), input_error);
    CHECK_THROWS_AS(parse_rational("1 "), input_error);
    CHECK_THROWS_AS(parse_rational("a/b"), input_error);
    CHECK_THROWS_AS(parse_rational("1/"), input_error);
    CHECK_THROWS_AS(parse_rational("/2"), input_error);
    CHECK_THROWS_AS(parse_rational("--1"), input_error);
}

TEST_CASE("to_string uses bare integers and reduced fractions") {
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(-5)) == "-5");
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(8, 2)) == "4");
}

TEST_CASE("parse and print round trip") {
    for (const char* text : {"0", "-1", "5/4", "-13/4", "49/20", "100/99"}) {
        CHECK(to_string(parse_rational(text)) == text);
    }
}
