#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdcodes/codes.hpp"
#include "cdcodes/residue.hpp"

namespace cdcodes {

/// Solution of p = A^2 + (2^t - 1) B^2 with A, B >= 1.
struct Representation {
    std::uint64_t A;
    std::uint64_t B;
    int t;

    friend bool operator==(const Representation& x, const Representation& y) {
        return x.A == y.A && x.B == y.B && x.t == y.t;
    }
};

/// n * M = p - 1 with n >= 2.
struct FactorPair {
    std::uint64_t n;
    std::uint64_t M;
};

namespace detail {

inline std::uint64_t isqrt64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (x > 0 && x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

} // namespace detail

/// Exhaustive scan of p = A^2 + (2^t - 1) B^2 for t in [2, t_max], sorted by
/// t then B. The empty list is a valid outcome (the Main Algorithm stops).
inline std::vector<Representation> representations(std::uint64_t p, int t_max) {
    if (!is_prime(p)) {
        throw NotPrime("representations requires a prime p");
    }
    std::vector<Representation> out;
    for (int t = 2; t <= t_max; ++t) {
        std::uint64_t q = (std::uint64_t{1} << t) - 1;
        std::uint64_t b_limit = detail::isqrt64((p - 1) / q);
        for (std::uint64_t B = 1; B <= b_limit; ++B) {
            std::uint64_t a2 = p - q * B * B;
            std::uint64_t A = detail::isqrt64(a2);
            if (A >= 1 && A * A == a2) {
                out.push_back(Representation{A, B, t});
            }
        }
    }
    return out;
}

/// Stated congruence criteria for p = a^2 + q b^2 with q in {3, 7, 15}
/// (p = 2 never has such a representation and is excluded from the q = 7
/// congruence class test).
inline bool prime_form_check(std::uint64_t p, std::uint64_t q) {
    if (!is_prime(p)) {
        throw NotPrime("prime_form_check requires a prime p");
    }
    switch (q) {
        case 3:
            return p == 3 || p % 3 == 1;
        case 7:
            return p == 7 || (p != 2 && (p % 7 == 1 || p % 7 == 2 || p % 7 == 4));
        case 15: {
            std::uint64_t m = p % 60;
            return m == 1 || m == 19 || m == 31 || m == 49;
        }
        default:
            throw UnsupportedQ("prime_form_check supports q in {3, 7, 15}");
    }
}

/// pi = (A - B) + (B 2^r) w; its norm is A^2 + (2^t - 1) B^2 = p for every r.
inline VElement derive_pi(const Representation& repr, int r) {
    VElement pi(BigInt(repr.A) - BigInt(repr.B), BigInt(repr.B) << r);
    VContext ctx(repr.t, r);
    Dyadic norm = v_norm(pi, ctx);
    BigInt expected = BigInt(repr.A) * repr.A + BigInt((std::uint64_t{1} << repr.t) - 1) * repr.B * repr.B;
    if (!norm.is_integer() || norm.to_integer() != expected) {
        throw NormMismatch("derived pi has unexpected norm");
    }
    return pi;
}

/// All (n, M) with n M = p - 1 and n >= 2, ascending in n.
inline std::vector<FactorPair> factor_pairs(std::uint64_t p) {
    if (!is_prime(p)) {
        throw NotPrime("factor_pairs requires a prime p");
    }
    std::vector<FactorPair> out;
    for (std::uint64_t n = 2; n <= p - 1; ++n) {
        if ((p - 1) % n == 0) {
            out.push_back(FactorPair{n, (p - 1) / n});
        }
    }
    return out;
}

/// One grid point of the Main Algorithm: an algebra/representation choice, an
/// alpha exponent r, a code length n, and the beta search outcome.
struct CodeCandidate {
    Representation repr;
    int r;
    ResidueField field;
    FactorPair pair;
    std::optional<BetaWitness> beta;
    bool feasible;

    std::uint64_t rate_denominator() const { return pair.n; }
};

/// First r tried for a given doubling depth. Octonions start at alpha = 1/2
/// (the convention of the t = 3 examples); other depths start at t-1.
inline int search_r_base(int t) { return t == 3 ? 1 : t - 1; }

/// The Main Algorithm: enumerate representations of p, escalate r up to
/// t-1+r_extra, enumerate factor pairs with n >= rows+1, search beta for each
/// field, and rank. Feasible candidates come first, ordered by ascending n
/// (descending rate at fixed message dimension), then smaller t, then smaller
/// r; infeasible grid points follow in the same order.
inline std::vector<CodeCandidate> main_algorithm(std::uint64_t p, int t_max = 6, int r_extra = 0,
                                                 int rows = 2,
                                                 BetaPolicy policy = BetaPolicy::PrimitivePreferred) {
    if (!is_prime(p) || p < 5) {
        throw NotPrime("main_algorithm requires a prime p >= 5");
    }
    std::vector<CodeCandidate> out;
    auto pairs = factor_pairs(p);
    for (const auto& repr : representations(p, t_max)) {
        for (int r = search_r_base(repr.t); r <= repr.t - 1 + r_extra; ++r) {
            ResidueField field = build_field(derive_pi(repr, r), VContext(repr.t, r));
            for (const auto& pair : pairs) {
                if (pair.n < static_cast<std::uint64_t>(rows) + 1) continue;
                auto beta = find_beta(field, pair.n, policy);
                out.push_back(CodeCandidate{repr, r, field, pair, beta, beta.has_value()});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const CodeCandidate& a, const CodeCandidate& b) {
        if (a.feasible != b.feasible) return a.feasible;
        if (a.pair.n != b.pair.n) return a.pair.n < b.pair.n;
        if (a.repr.t != b.repr.t) return a.repr.t < b.repr.t;
        return a.r < b.r;
    });
    return out;
}

} // namespace cdcodes
