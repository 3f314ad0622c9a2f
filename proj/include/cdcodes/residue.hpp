#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "cdcodes/modular.hpp"
#include "cdcodes/vring.hpp"

namespace cdcodes {

/// The residue field V_pi, isomorphic to Z_p with p = n(pi) prime.
/// s is the label of w: the unique solution of pi.a + pi.b * x = 0 (mod p).
struct ResidueField {
    VContext ctx;
    VElement pi;
    std::uint64_t p;
    std::uint64_t s;
};

namespace detail {

inline std::uint64_t mod_label(const BigInt& value, std::uint64_t p) {
    BigInt m = value % p;
    if (m.sign() < 0) m += p;
    return m.convert_to<std::uint64_t>();
}

} // namespace detail

inline ResidueField build_field(const VElement& pi, const VContext& ctx) {
    Dyadic norm = v_norm(pi, ctx);
    if (!norm.is_integer()) {
        throw NormNotIntegral("n(pi) = " + norm.str() + " is not an integer");
    }
    BigInt n = norm.to_integer();
    if (n.sign() <= 0 || n > std::numeric_limits<std::uint64_t>::max() ||
        !is_prime(n.convert_to<std::uint64_t>())) {
        throw NormNotPrime("n(pi) = " + n.str() + " is not prime");
    }
    std::uint64_t p = n.convert_to<std::uint64_t>();
    std::uint64_t b = detail::mod_label(pi.b, p);
    if (b == 0) {
        throw BNotInvertible("pi.b is divisible by p");
    }
    std::uint64_t a = detail::mod_label(pi.a, p);
    std::uint64_t s = detail::mulmod((p - a) % p, mod_inverse(static_cast<std::int64_t>(b), Modulus(p)), p);
    return ResidueField{ctx, pi, p, s};
}

/// Ring homomorphism V -> Z_p with kernel (pi): a + bw |-> (a + b s) mod p.
inline std::uint64_t label_of(const VElement& x, const ResidueField& f) {
    return detail::mod_label(x.a + x.b * f.s, f.p);
}

namespace detail {

// One pass over the Label Algorithm window sigma, tau in {-R-1, ..., R},
// R = floor((p-1)/2). Norms are compared as the exact integers n * 4^r.
// The callback receives (sigma, tau, label, scaled_norm).
template <typename Fn>
void scan_window(const ResidueField& f, Fn&& fn) {
    const long long R = static_cast<long long>((f.p - 1) / 2);
    const long long p = static_cast<long long>(f.p);
    const long long q = f.ctx.q();
    const long long pw = 1LL << f.ctx.r;
    const long long s = static_cast<long long>(f.s);
    for (long long tau = -R - 1; tau <= R; ++tau) {
        long long start = ((s * tau - R - 1) % p + p) % p; // label at sigma = -R-1
        long long label = start;
        for (long long sigma = -R - 1; sigma <= R; ++sigma) {
            long long first = sigma * pw + tau;
            long long scaled = first * first + q * tau * tau;
            fn(sigma, tau, static_cast<std::uint64_t>(label), scaled);
            if (++label == p) label = 0;
        }
    }
}

struct RepChoice {
    long long sigma = 0;
    long long tau = 0;
    long long scaled_norm = -1;
    bool within_pi_bound = false;

    bool better_than(const RepChoice& other) const {
        if (other.scaled_norm < 0) return true;
        if (scaled_norm != other.scaled_norm) return scaled_norm < other.scaled_norm;
        if (within_pi_bound != other.within_pi_bound) return within_pi_bound;
        if (sigma != other.sigma) return sigma < other.sigma;
        return tau < other.tau;
    }
};

} // namespace detail

/// Minimal-norm representative of the class labelled k, per the Label
/// Algorithm: among window pairs with n(sigma + tau w) < p pick minimal norm;
/// ties prefer |sigma|+|tau| <= |pi.a|+|pi.b|, then lexicographic (sigma, tau).
inline VElement unlabel_min_norm(std::uint64_t k, const ResidueField& f) {
    const long long bound =
        (boost::multiprecision::abs(f.pi.a) + boost::multiprecision::abs(f.pi.b))
            .convert_to<long long>();
    const long long limit = static_cast<long long>(f.p) << (2 * f.ctx.r);
    detail::RepChoice best;
    detail::scan_window(f, [&](long long sigma, long long tau, std::uint64_t label, long long scaled) {
        if (label != k || scaled >= limit) return;
        detail::RepChoice cand{sigma, tau, scaled, std::abs(sigma) + std::abs(tau) <= bound};
        if (cand.better_than(best)) best = cand;
    });
    if (best.scaled_norm < 0) {
        throw NoRepresentative("no window representative with norm below p for label " +
                               std::to_string(k));
    }
    return VElement(best.sigma, best.tau);
}

/// Minimal-norm representatives for every label, built in one window pass.
inline std::vector<VElement> minimal_representatives(const ResidueField& f) {
    const long long bound =
        (boost::multiprecision::abs(f.pi.a) + boost::multiprecision::abs(f.pi.b))
            .convert_to<long long>();
    const long long limit = static_cast<long long>(f.p) << (2 * f.ctx.r);
    std::vector<detail::RepChoice> best(f.p);
    detail::scan_window(f, [&](long long sigma, long long tau, std::uint64_t label, long long scaled) {
        if (scaled >= limit) return;
        detail::RepChoice cand{sigma, tau, scaled, std::abs(sigma) + std::abs(tau) <= bound};
        if (cand.better_than(best[label])) best[label] = cand;
    });
    std::vector<VElement> out;
    out.reserve(f.p);
    for (std::uint64_t k = 0; k < f.p; ++k) {
        if (best[k].scaled_norm < 0) {
            throw NoRepresentative("no window representative with norm below p for label " +
                                   std::to_string(k));
        }
        out.emplace_back(best[k].sigma, best[k].tau);
    }
    return out;
}

/// Generalized Cayley-Dickson weight: minimal |sigma| + |tau| over window
/// representatives of the class (no norm restriction).
inline long long weight_g(std::uint64_t k, const ResidueField& f) {
    long long best = -1;
    detail::scan_window(f, [&](long long sigma, long long tau, std::uint64_t label, long long) {
        if (label != k) return;
        long long w = std::abs(sigma) + std::abs(tau);
        if (best < 0 || w < best) best = w;
    });
    return best;
}

/// weight_g for every label in one window pass.
inline std::vector<long long> weight_table(const ResidueField& f) {
    std::vector<long long> best(f.p, -1);
    detail::scan_window(f, [&](long long sigma, long long tau, std::uint64_t label, long long) {
        long long w = std::abs(sigma) + std::abs(tau);
        if (best[label] < 0 || w < best[label]) best[label] = w;
    });
    return best;
}

inline long long distance_g(std::uint64_t x, std::uint64_t y, const ResidueField& f) {
    return weight_g((x % f.p + f.p - y % f.p) % f.p, f);
}

/// Witness for beta^n = w (sign +1) or beta^n = -w (sign -1) in V_pi.
struct BetaWitness {
    std::uint64_t label;
    VElement representative;
    int sign;
    std::uint64_t order;
    bool primitive;
};

enum class BetaPolicy {
    PrimitivePreferred, // smallest primitive label, else smallest overall
    Paper,              // smallest label overall
};

/// All labels x with x^n = s or x^n = p - s, ascending.
inline std::vector<BetaWitness> beta_candidates(const ResidueField& f, std::uint64_t n) {
    if (n == 0 || (f.p - 1) % n != 0) {
        throw NotDivisor("n must divide p-1");
    }
    std::vector<BetaWitness> out;
    Modulus m(f.p);
    for (std::uint64_t x = 1; x < f.p; ++x) {
        std::uint64_t pw = mod_pow(x, n, m);
        int sign = 0;
        if (pw == f.s) {
            sign = 1;
        } else if (pw == f.p - f.s) {
            sign = -1;
        } else {
            continue;
        }
        std::uint64_t order = multiplicative_order(x, m);
        out.push_back(BetaWitness{x, unlabel_min_norm(x, f), sign, order, order == f.p - 1});
    }
    return out;
}

inline std::optional<BetaWitness> find_beta(const ResidueField& f, std::uint64_t n,
                                            BetaPolicy policy = BetaPolicy::PrimitivePreferred) {
    auto candidates = beta_candidates(f, n);
    if (candidates.empty()) {
        return std::nullopt;
    }
    if (policy == BetaPolicy::PrimitivePreferred) {
        for (const auto& c : candidates) {
            if (c.primitive) return c;
        }
    }
    return candidates.front();
}

} // namespace cdcodes
