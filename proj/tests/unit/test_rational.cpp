#include <doctest.h>

#include "reconf/bigcount.hpp"
#include "reconf/rational.hpp"

using reconf::ArgumentError;
using reconf::Rational;

TEST_CASE("rationals reduce and normalise sign") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), ArgumentError);
}

TEST_CASE("comparisons cross-multiply exactly") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 3) > Rational(3, 5));
    CHECK(Rational(4, 2) == Rational(2));
    CHECK(Rational(7, 3) <= Rational(7, 3));
    // values whose double images collide
    const Rational a(1000000000000000001LL, 1000000000000000000LL);
    CHECK(a > Rational(1));
    CHECK(Rational(1) < a);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2) - Rational(1, 2) == Rational(3, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), ArgumentError);
}

TEST_CASE("floor") {
    CHECK(Rational(3, 2).floor() == 1);
    CHECK(Rational(2).floor() == 2);
    CHECK(Rational(0).floor() == 0);
    CHECK(Rational(-3, 2).floor() == -2);
}

TEST_CASE("128-bit counters saturate and print in decimal") {
    using reconf::kU128Max;
    using reconf::sat_add;
    using reconf::sat_mul;
    using reconf::u128;
    using reconf::u128_str;

    CHECK(u128_str(0) == "0");
    CHECK(u128_str(4599) == "4599");
    const u128 big = (u128{1} << 64);
    CHECK(u128_str(big) == "18446744073709551616");
    CHECK(u128_str(kU128Max) == "340282366920938463463374607431768211455");

    CHECK(sat_add(kU128Max, 1) == kU128Max);
    CHECK(sat_mul(kU128Max, 2) == kU128Max);
    CHECK(sat_mul(big, big) == kU128Max);
    CHECK(sat_add(3, 4) == 7);
    CHECK(sat_mul(3, 4) == 12);
    CHECK(sat_mul(0, kU128Max) == 0);
}

TEST_CASE("string round trip") {
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-2/4") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse(""), ArgumentError);
    CHECK_THROWS_AS(Rational::parse("1/"), ArgumentError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ArgumentError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ArgumentError);
    CHECK_THROWS_AS(Rational::parse("1/2x"), ArgumentError);
}
