#include <catch2/catch_amalgamated.hpp>

#include "cdcodes/modular.hpp"
#include "cdcodes/rng.hpp"

using namespace cdcodes;

TEST_CASE("mod_inverse golden values") {
    CHECK(mod_inverse(8, Modulus(29)) == 11);
    CHECK(mod_inverse(16, Modulus(61)) == 42);
    CHECK(mod_inverse(1, Modulus(7)) == 1);
    CHECK(mod_inverse(-5, Modulus(61)) == mod_inverse(56, Modulus(61)));
    CHECK_THROWS_AS(mod_inverse(6, Modulus(9)), NotInvertible);
    CHECK_THROWS_AS(mod_inverse(0, Modulus(7)), NotInvertible);
}

TEST_CASE("mod_pow golden values") {
    CHECK(mod_pow(25, 4, Modulus(61)) == 42);
    CHECK(mod_pow(22, 6, Modulus(151)) == 44);
    CHECK(mod_pow(9, 10, Modulus(71)) == 32);
    CHECK(mod_pow(123, 0, Modulus(97)) == 1);
    CHECK(mod_pow(0, 0, Modulus(97)) == 1);
}

TEST_CASE("is_prime") {
    CHECK(is_prime(29));
    CHECK(is_prime(163));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(77));
    CHECK(is_prime(2147483647ULL));           // 2^31 - 1
    CHECK_FALSE(is_prime(4294967297ULL));      // 641 * 6700417
    CHECK(is_prime(18446744073709551557ULL)); // largest 64-bit prime
    // agree with trial division on a contiguous range
    auto slow = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    };
    for (std::uint64_t n = 0; n < 2000; ++n) {
        CHECK(is_prime(n) == slow(n));
    }
}

TEST_CASE("multiplicative_order golden values") {
    CHECK(multiplicative_order(10, Modulus(61)) == 60);
    CHECK(multiplicative_order(25, Modulus(61)) == 15);
    CHECK(multiplicative_order(1, Modulus(97)) == 1);
    CHECK(multiplicative_order(8, Modulus(29)) == 28);
    CHECK_THROWS_AS(multiplicative_order(0, Modulus(7)), NotInvertible);
}

TEST_CASE("discrete_log golden values") {
    CHECK(discrete_log(107, 4, Modulus(149)) == 4);
    CHECK(discrete_log(1, 10, Modulus(61)) == 0);
    CHECK(discrete_log(14, 10, Modulus(61)) == 10);
}

TEST_CASE("mod_sqrt golden values") {
    auto r = mod_sqrt(4, Modulus(61));
    REQUIRE(r);
    CHECK(r->first == 2);
    CHECK(r->second == 59);
    auto r2 = mod_sqrt(14, Modulus(61));
    REQUIRE(r2);
    CHECK(r2->first == 21);
    CHECK(r2->second == 40);
    CHECK_FALSE(mod_sqrt(3, Modulus(7)));
    auto z = mod_sqrt(0, Modulus(13));
    REQUIRE(z);
    CHECK(z->first == 0);
}

TEST_CASE("numeric properties on random inputs") {
    SplitMix64 rng(7);
    const std::uint64_t primes[] = {29, 31, 61, 71, 149, 151, 1009, 65537, 1048583};
    for (std::uint64_t p : primes) {
        Modulus m(p);
        for (int iter = 0; iter < 40; ++iter) {
            std::uint64_t x = 1 + rng.below(p - 1);
            // inverse
            CHECK(detail::mulmod(x, mod_inverse(static_cast<std::int64_t>(x), m), p) == 1);
            // Fermat
            CHECK(mod_pow(x, p - 1, m) == 1);
            // order divides p-1 and is attained
            std::uint64_t d = multiplicative_order(x, m);
            CHECK((p - 1) % d == 0);
            CHECK(mod_pow(x, d, m) == 1);
            // dlog round trip within the subgroup
            std::uint64_t j = rng.below(d);
            CHECK(discrete_log(mod_pow(x, j, m), x, m) == j % d);
            // sqrt soundness
            std::uint64_t y = rng.below(p);
            auto roots = mod_sqrt(y, m);
            if (roots) {
                CHECK(detail::mulmod(roots->first, roots->first, p) == y % p);
                CHECK(detail::mulmod(roots->second, roots->second, p) == y % p);
            }
        }
    }
}

TEST_CASE("mod_sqrt none means no root exists (exhaustive small p)") {
    for (std::uint64_t p : {3ULL, 7ULL, 11ULL, 13ULL, 29ULL, 61ULL, 149ULL}) {
        Modulus m(p);
        for (std::uint64_t x = 0; x < p; ++x) {
            bool has_root = false;
            for (std::uint64_t y = 0; y < p; ++y) {
                if (y * y % p == x) has_root = true;
            }
            CHECK(mod_sqrt(x, m).has_value() == has_root);
        }
    }
}

TEST_CASE("discrete_log rejects values outside the group") {
    // 25 generates the order-15 subgroup mod 61; 2 is primitive, not inside.
    CHECK_THROWS_AS(discrete_log(2, 25, Modulus(61)), NotInGroup);
    CHECK_FALSE(try_discrete_log(2, 25, Modulus(61)).has_value());
    CHECK(try_discrete_log(mod_pow(25, 7, Modulus(61)), 25, Modulus(61)) == 7);
}

TEST_CASE("discrete_log uses bsgs above the cutover") {
    Modulus m(2097593); // prime > 2^20
    std::uint64_t base = 3;
    std::uint64_t j = 1234567;
    CHECK(discrete_log(mod_pow(base, j, m), base, m) ==
          j % multiplicative_order(base, m));
}
