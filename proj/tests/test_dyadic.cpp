#include <catch2/catch_amalgamated.hpp>

#include "cdcodes/dyadic.hpp"
#include "cdcodes/rng.hpp"

using namespace cdcodes;

TEST_CASE("dyadic canonical form") {
    Dyadic d(12, 3); // 96 = 3 * 2^5
    CHECK(d.mantissa() == 3);
    CHECK(d.exponent() == 5);

    Dyadic z(0, 17);
    CHECK(z.is_zero());
    CHECK(z.exponent() == 0);

    Dyadic neg(-8, -1); // -4 = -1 * 2^2
    CHECK(neg.mantissa() == -1);
    CHECK(neg.exponent() == 2);
}

TEST_CASE("dyadic arithmetic is exact") {
    Dyadic half = Dyadic::one_over_pow2(1);
    Dyadic quarter = Dyadic::one_over_pow2(2);
    CHECK(half + quarter == Dyadic(3, -2));
    CHECK(half - half == Dyadic(0));
    CHECK(half * quarter == Dyadic(1, -3));
    CHECK(-half == Dyadic(-1, -1));
    CHECK(half + half == Dyadic(1));

    // (1/2 + 1/4)^2 + 7 * (1/4)^2 = 9/16 + 7/16 = 1
    Dyadic v = (half + quarter) * (half + quarter) + Dyadic(7) * quarter * quarter;
    CHECK(v == Dyadic(1));
}

TEST_CASE("dyadic comparisons and integer conversion") {
    CHECK(Dyadic(3, -2) < Dyadic(1));
    CHECK(Dyadic(1) < Dyadic(5, -2));
    CHECK(Dyadic(-1, -1) < Dyadic(0));
    CHECK(Dyadic(6).is_integer());
    CHECK(Dyadic(6).to_integer() == 6);
    CHECK(Dyadic(3, 2).to_integer() == 12);
    CHECK_FALSE(Dyadic(1, -1).is_integer());
    CHECK_THROWS_AS(Dyadic(1, -1).to_integer(), NonIntegralResult);
    CHECK(Dyadic(5, -3).scaled_integer(3) == 5);
    CHECK(Dyadic(5, -3).scaled_integer(4) == 10);
}

TEST_CASE("dyadic random ring identities") {
    SplitMix64 rng(2024);
    auto draw = [&]() {
        long long m = static_cast<long long>(rng.below(2001)) - 1000;
        int e = static_cast<int>(rng.below(9)) - 4;
        return Dyadic(m, e);
    };
    for (int iter = 0; iter < 500; ++iter) {
        Dyadic a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * Dyadic(1) == a);
    }
}

TEST_CASE("dyadic rendering") {
    CHECK(Dyadic(1, -1).str() == "1/2");
    CHECK(Dyadic(-3, -3).str() == "-3/8");
    CHECK(Dyadic(7).str() == "7");
    CHECK(Dyadic(3, 2).str() == "12");
    CHECK(Dyadic(0).str() == "0");
}
