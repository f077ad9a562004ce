#include <doctest.h>

#include "discrimina/errors.hpp"
#include "discrimina/rational.hpp"
#include "support.hpp"

using testing_support::q;

using namespace discrimina;

TEST_CASE("parse_rational accepts canonical and non-canonical forms") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("\xE2\x88\x92" "2/3") == Rational(-2, 3));
    CHECK(to_string(parse_rational("-10/5")) == "-2");
}

TEST_CASE("parse_rational rejects floats and junk") {
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("arithmetic stays canonical") {
    const Rational a(1, 6), b(1, 3);
    const Rational s = a + b;
    CHECK(to_string(s) == "1/2");
    CHECK(parse_rational(to_string(s)) == s);
    CHECK(s.get_den() > 0);
    CHECK(to_string(q(-4, 2)) == "-2");
    CHECK(to_string(Rational(3, 4) * Rational(2, 3)) == "1/2");
}

TEST_CASE("binomial and lcm") {
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
    const Rational v[] = {Rational(1, 4), Rational(5, 6), Rational(3)};
    CHECK(denominator_lcm(v) == 12);
}

TEST_CASE("simplest_between") {
    CHECK(simplest_between(q(3, 10), q(4, 10)) == Rational(1, 3));
    CHECK(simplest_between(Rational(-1, 2), Rational(1, 2)) == 0);
    CHECK(simplest_between(Rational(7, 5), Rational(7, 5)) == Rational(7, 5));
    CHECK(simplest_between(q(-4, 10), q(-3, 10)) == Rational(-1, 3));
}

TEST_CASE("from_double is exact and to_decimal rounds") {
    CHECK(from_double(0.5) == Rational(1, 2));
    CHECK(from_double(-0.75) == Rational(-3, 4));
    CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
    CHECK(power(Rational(-2, 3), 3) == Rational(-8, 27));
}
