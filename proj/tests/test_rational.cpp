#include "doctest.h"

#include "locdense/errors.hpp"
#include "locdense/rational.hpp"

using namespace locdense;

TEST_CASE("rational parsing accepts integers and fractions") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
}

TEST_CASE("rational parsing rejects decimals and malformed input") {
    CHECK_THROWS_AS(Rational::parse("0.5"), InputError);
    CHECK_THROWS_AS(Rational::parse("1e3"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/"), InputError);
    CHECK_THROWS_AS(Rational::parse("/2"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), InputError);
    CHECK_THROWS_AS(Rational::parse("a/b"), InputError);
    CHECK_THROWS_AS(Rational::parse(" 1/2"), InputError);
}

TEST_CASE("rationals canonicalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(2, 4).num() == Integer(1));
    CHECK(Rational(2, 4).den() == Integer(2));
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK_THROWS_AS(a / Rational(0), InputError);

    // A sum that double arithmetic cannot represent exactly.
    Rational tenth_sum(0);
    for (int i = 0; i < 10; ++i) tenth_sum = tenth_sum + Rational(1, 10);
    CHECK(tenth_sum == Rational(1));
}

TEST_CASE("rational powers and comparisons") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(1, 2).pow(0) == Rational(1));
    CHECK(Rational(-1, 2).pow(2) == Rational(1, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(7, 2).sign() == 1);
}

TEST_CASE("rational string form is num/den or a bare integer") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));
    CHECK(Rational(3).is_integer());
    CHECK_FALSE(Rational(3, 2).is_integer());
}
