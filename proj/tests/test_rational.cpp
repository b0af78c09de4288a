#include <doctest.h>

#include "koszul/rational.hpp"

using namespace koszul;

TEST_CASE("bigint round trips decimal strings") {
    CHECK(bigint::from_decimal("0").to_decimal() == "0");
    CHECK(bigint::from_decimal("-17").to_decimal() == "-17");
    CHECK(bigint::from_decimal("123456789012345678901234567890").to_decimal() ==
          "123456789012345678901234567890");
}

TEST_CASE("bigint arithmetic crosses limb boundaries") {
    bigint a = bigint::from_decimal("4294967295");  // 2^32 - 1
    CHECK((a + bigint(1)).to_decimal() == "4294967296");
    CHECK((a * a).to_decimal() == "18446744065119617025");
    CHECK((a - a).is_zero());
    CHECK((bigint(5) - bigint(9)).to_decimal() == "-4");
}

TEST_CASE("bigint gcd and exact division") {
    CHECK(bigint::gcd(bigint(12), bigint(-18)).to_decimal() == "6");
    CHECK(bigint::gcd(bigint(0), bigint(7)).to_decimal() == "7");
    bigint big = bigint::from_decimal("123456789123456789");
    CHECK(bigint::gcd(big * bigint(6), big * bigint(4)).to_decimal() ==
          (big * bigint(2)).to_decimal());
    CHECK(bigint::div_exact(big * bigint(35), bigint(7)).to_decimal() ==
          (big * bigint(5)).to_decimal());
}

TEST_CASE("rationals reduce and normalize signs") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(1, -2) == rational(-1, 2));
    CHECK(rational(0, 5) == rational(0));
    CHECK(rational(-6, -4).str() == "3/2");
}

TEST_CASE("rational field operations") {
    rational half(1, 2), third(1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK((half - half).is_zero());
    CHECK((half * third).str() == "1/6");
    CHECK((half / third).str() == "3/2");
    CHECK_THROWS_AS(half / rational(0), std::domain_error);
    CHECK(rational(-3, 2) < rational(1, 7));
}

TEST_CASE("rational parsing") {
    CHECK(rational::parse("5") == rational(5));
    CHECK(rational::parse("-1/2") == rational(-1, 2));
    CHECK(rational::parse("6/4") == rational(3, 2));
}

TEST_CASE("rational arithmetic stays exact on long products") {
    rational prod(1);
    for (int i = 1; i <= 40; ++i) prod *= rational(i, i + 1);
    CHECK(prod == rational(1, 41));
}
