#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdcodes/errors.hpp"

namespace cdcodes {

/// Positive modulus p >= 2. Operations that need primality check it themselves.
struct Modulus {
    std::uint64_t p;

    explicit Modulus(std::uint64_t modulus) : p(modulus) {
        if (p < 2) {
            throw BadParams("modulus must be >= 2");
        }
    }
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

} // namespace detail

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, Modulus m) {
    std::uint64_t result = 1 % m.p;
    std::uint64_t b = base % m.p;
    while (exp > 0) {
        if (exp & 1) {
            result = detail::mulmod(result, b, m.p);
        }
        b = detail::mulmod(b, b, m.p);
        exp >>= 1;
    }
    return result;
}

/// Deterministic for all n < 2^64 (fixed Miller-Rabin witness set).
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = mod_pow(a, d, Modulus(n));
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::uint64_t mod_inverse(std::int64_t x, Modulus m) {
    std::int64_t p = static_cast<std::int64_t>(m.p);
    std::int64_t a = x % p;
    if (a < 0) a += p;
    std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) {
        throw NotInvertible("element not invertible modulo " + std::to_string(m.p));
    }
    return static_cast<std::uint64_t>(t0 < 0 ? t0 + p : t0);
}

namespace detail {

inline std::vector<std::uint64_t> factorize(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

} // namespace detail

/// Least d >= 1 with x^d = 1 (mod p); p must be prime and gcd(x, p) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t x, Modulus m) {
    if (!is_prime(m.p)) {
        throw BadParams("multiplicative_order requires a prime modulus");
    }
    if (x % m.p == 0) {
        throw NotInvertible("zero has no multiplicative order");
    }
    std::uint64_t order = m.p - 1;
    for (std::uint64_t q : detail::factorize(m.p - 1)) {
        while (order % q == 0 && mod_pow(x, order / q, m) == 1) {
            order /= q;
        }
    }
    return order;
}

/// Least j >= 0 with base^j = x (mod p), searching the cyclic group <base>;
/// nullopt when x lies outside it. Brute force below p = 2^20, BSGS above.
inline std::optional<std::uint64_t> try_discrete_log(std::uint64_t x, std::uint64_t base, Modulus m) {
    x %= m.p;
    base %= m.p;
    if (x == 0 || base == 0) return std::nullopt;
    std::uint64_t d = multiplicative_order(base, m);
    if (m.p < (1ULL << 20)) {
        std::uint64_t acc = 1 % m.p;
        for (std::uint64_t j = 0; j < d; ++j) {
            if (acc == x) return j;
            acc = detail::mulmod(acc, base, m.p);
        }
        return std::nullopt;
    }
    std::uint64_t step = 1;
    while (step * step < d) ++step;
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(step);
    std::uint64_t acc = 1 % m.p;
    for (std::uint64_t j = 0; j < step; ++j) {
        baby.emplace(acc, j);
        acc = detail::mulmod(acc, base, m.p);
    }
    std::uint64_t giant = mod_pow(mod_inverse(static_cast<std::int64_t>(base), m), step, m);
    std::uint64_t gamma = x;
    for (std::uint64_t i = 0; i * step <= d; ++i) {
        auto it = baby.find(gamma);
        if (it != baby.end()) {
            std::uint64_t j = i * step + it->second;
            if (j < d) return j;
        }
        gamma = detail::mulmod(gamma, giant, m.p);
    }
    return std::nullopt;
}

inline std::uint64_t discrete_log(std::uint64_t x, std::uint64_t base, Modulus m) {
    auto j = try_discrete_log(x, base, m);
    if (!j) {
        throw NotInGroup("value is not a power of the base modulo " + std::to_string(m.p));
    }
    return *j;
}

/// Tonelli-Shanks. Both square roots {y, p-y} with y <= p-y, or nullopt for a
/// non-residue. p must be an odd prime.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> mod_sqrt(std::uint64_t x, Modulus m) {
    if (m.p == 2 || !is_prime(m.p)) {
        throw BadParams("mod_sqrt requires an odd prime modulus");
    }
    x %= m.p;
    if (x == 0) return std::make_pair(0ULL, 0ULL);
    if (mod_pow(x, (m.p - 1) / 2, m) != 1) return std::nullopt;

    std::uint64_t q = m.p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t y;
    if (s == 1) {
        y = mod_pow(x, (m.p + 1) / 4, m);
    } else {
        std::uint64_t z = 2;
        while (mod_pow(z, (m.p - 1) / 2, m) != m.p - 1) ++z;
        std::uint64_t c = mod_pow(z, q, m);
        y = mod_pow(x, (q + 1) / 2, m);
        std::uint64_t t = mod_pow(x, q, m);
        int rounds = s;
        while (t != 1) {
            std::uint64_t t2 = t;
            int i = 0;
            while (t2 != 1) {
                t2 = detail::mulmod(t2, t2, m.p);
                ++i;
            }
            std::uint64_t b = c;
            for (int j = 0; j < rounds - i - 1; ++j) {
                b = detail::mulmod(b, b, m.p);
            }
            y = detail::mulmod(y, b, m.p);
            c = detail::mulmod(b, b, m.p);
            t = detail::mulmod(t, c, m.p);
            rounds = i;
        }
    }
    std::uint64_t other = m.p - y;
    return std::make_pair(std::min(y, other), std::max(y, other));
}

} // namespace cdcodes
