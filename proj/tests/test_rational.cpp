#include "doctest.h"
#include "liealg/rational.hpp"

using liealg::Rational;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    const Rational a(2, 4);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);

    const Rational b(3, -6);
    CHECK(b.numerator() == -1);
    CHECK(b.denominator() == 2);

    const Rational zero(0, 7);
    CHECK(zero.is_zero());
    CHECK(zero.denominator() == 1);

    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1) / Rational(3)) == Rational(1, 3));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("3").to_string() == "3");
    CHECK(Rational::parse("-1/2").to_string() == "-1/2");
    CHECK(Rational::parse("4/8") == Rational(1, 2));
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1).inverse() / Rational(0));
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(5, 10) == Rational(1, 2));
    CHECK(Rational(2, 3).abs() == Rational(2, 3));
    CHECK(Rational(-2, 3).abs() == Rational(2, 3));
}
