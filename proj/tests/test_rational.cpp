#include "doctest.h"

#include <limits>

#include "tristar/random.hpp"
#include "tristar/rational.hpp"

using namespace tristar;

TEST_CASE("normalization")
{
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, -5) == Rational(0));
    CHECK(Rational(-4, -8).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("ceil, floor and str")
{
    CHECK(Rational(34, 9).ceil() == 4);
    CHECK(Rational(34, 9).floor() == 3);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(8).ceil() == 8);
    CHECK(Rational(34, 9).str() == "34/9");
    CHECK(Rational(12, 3).str() == "4");
    CHECK(Rational(-1, 2).str() == "-1/2");
}

TEST_CASE("arithmetic and ordering")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 2) >= Rational(7, 2));
}

TEST_CASE("comparison does not overflow on large operands")
{
    constexpr auto big = std::numeric_limits<std::int64_t>::max();
    CHECK(Rational(big - 1, big) < Rational(big, big - 2));
    CHECK(Rational(big, 3) > Rational(big - 1, 3));
}

TEST_CASE("overflowing arithmetic throws instead of wrapping")
{
    constexpr auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Rational(big) + Rational(1), OverflowError);
    CHECK_THROWS_AS(Rational(big) * Rational(2), OverflowError);
    CHECK_THROWS_AS(Rational(1, big) + Rational(1, big - 1), OverflowError);
}

TEST_CASE("field identities on random small rationals")
{
    SplitMix64 rng(17);
    auto draw = [&] {
        const auto num = static_cast<std::int64_t>(rng.below(2001)) - 1000;
        const auto den = static_cast<std::int64_t>(rng.below(999)) + 1;
        return Rational(num, den);
    };
    for (int i = 0; i < 2000; ++i) {
        const auto a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (b != Rational(0))
            CHECK((a / b) * b == a);
        CHECK((a < b) == (a.to_double() < b.to_double() && a != b));
        CHECK(a.floor() <= a);
        CHECK(Rational(a.ceil()) >= a);
        CHECK(a.ceil() - a.floor() == (a.den() == 1 ? 0 : 1));
    }
}
