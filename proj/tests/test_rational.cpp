#include "fmk/errors.hpp"
#include "fmk/rational.hpp"

#include "doctest.h"

using namespace fmk;

TEST_CASE("rational to_string uses bare integers and reduced fractions") {
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(-7)) == "-7");
    CHECK(to_string(Rational(1) / 2) == "1/2");
    CHECK(to_string(Rational(-3) / 4) == "-3/4");
    CHECK(to_string(Rational(4) / 2) == "2");   // auto-normalized
    CHECK(to_string(Rational(2) / -4) == "-1/2"); // denominator made positive
}

TEST_CASE("parse_rational accepts exactly the canonical forms") {
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("-12") == -12);
    CHECK(parse_rational("1/2") == Rational(1) / 2);
    CHECK(parse_rational("-3/4") == Rational(-3) / 4);
    CHECK(parse_rational("170141183460469231731687303715884105727") ==
          Rational(Int("170141183460469231731687303715884105727")));
}

TEST_CASE("parse_rational rejects non-canonical input") {
    for (const char* bad : {"", " 1", "1 ", "+1", "-0", "01", "1.5", "2/4", "1/1", "3/0",
                            "1/-2", "-1/-2", "a", "1/2/3", "0x10", "1e3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
}

TEST_CASE("parse inverts to_string") {
    for (int p = -12; p <= 12; ++p)
        for (int q = 1; q <= 9; ++q) {
            const Rational r = Rational(p) / q;
            CHECK(parse_rational(to_string(r)) == r);
        }
}

TEST_CASE("floor and frac handle negatives") {
    CHECK(floor_int(Rational(7) / 2) == 3);
    CHECK(floor_int(Rational(-7) / 2) == -4);
    CHECK(floor_int(Rational(-4)) == -4);
    CHECK(frac(Rational(7) / 2) == Rational(1) / 2);
    CHECK(frac(Rational(-7) / 2) == Rational(1) / 2);
    CHECK(frac(Rational(5)) == 0);
    CHECK(frac(Rational(-1) / 3) == Rational(2) / 3);
}
