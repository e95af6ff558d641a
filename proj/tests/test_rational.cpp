#include <doctest.h>

#include <limits>

#include "recto/rational.hpp"

using recto::Rational;

TEST_CASE("rationals are stored reduced with a positive denominator") {
    Rational r(4, 6);
    CHECK(r.num() == 2);
    CHECK(r.den() == 3);

    Rational negative(3, -9);
    CHECK(negative.num() == -1);
    CHECK(negative.den() == 3);

    Rational zero(0, 7);
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("unit fraction constructor") {
    CHECK(Rational::unit(6) == Rational(1, 6));
    CHECK_THROWS_AS(Rational::unit(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::unit(-3), std::invalid_argument);
}

TEST_CASE("arithmetic stays exact and reduced") {
    Rational half(1, 2), sixth(1, 6);
    CHECK(half + sixth == Rational(2, 3));
    CHECK(half - sixth == Rational(1, 3));
    CHECK((Rational(2, 13) - Rational(1, 8)).is_positive());

    // reduction invariant over a small sweep
    for (int a = -12; a <= 12; ++a)
        for (int b = 1; b <= 12; ++b) {
            Rational x(a, b);
            CHECK(x.den() > 0);
            CHECK(std::gcd(x.num() < 0 ? -x.num() : x.num(), x.den()) == 1);
        }
}

TEST_CASE("comparisons use exact cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 13) > Rational(1, 7));
    CHECK(Rational(2, 13) <= Rational(2, 13));
    CHECK(Rational(2, 3) == Rational(10, 15));
}

TEST_CASE("unit fraction predicate") {
    CHECK(Rational(1, 15).is_unit_fraction());
    CHECK(Rational(3, 45).is_unit_fraction());
    CHECK_FALSE(Rational(2, 15).is_unit_fraction());
}

TEST_CASE("overflow is detected, never wrapped") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(recto::checked_mul(big, 2), std::overflow_error);
    CHECK_THROWS_AS(recto::checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(recto::checked_sub(std::numeric_limits<std::int64_t>::min(), 1),
                    std::overflow_error);
}
