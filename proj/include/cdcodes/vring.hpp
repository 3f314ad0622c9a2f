#pragma once

#include <array>
#include <string>
#include <utility>

#include "cdcodes/cd_algebra.hpp"
#include "cdcodes/dyadic.hpp"
#include "cdcodes/errors.hpp"

namespace cdcodes {

/// Ambient parameters of V = Z + Zw: doubling depth t and alpha = 2^-r.
/// w satisfies w^2 = 2 alpha w - 2^t alpha^2.
struct VContext {
    int t;
    int r;

    VContext(int depth, int alpha_exp) : t(depth), r(alpha_exp) { check_wt_params(t, r); }

    long long q() const { return (1LL << t) - 1; }
    Dyadic alpha() const { return Dyadic::one_over_pow2(r); }
    Dyadic trace_w() const { return Dyadic(1, 1 - r); }          // 2 alpha
    Dyadic norm_w() const { return Dyadic(1, t - 2 * r); }       // 2^t alpha^2

    friend bool operator==(const VContext& a, const VContext& b) {
        return a.t == b.t && a.r == b.r;
    }
};

/// a + b w with integer coordinates.
struct VElement {
    BigInt a = 0;
    BigInt b = 0;

    VElement() = default;
    VElement(BigInt aa, BigInt bb) : a(std::move(aa)), b(std::move(bb)) {}

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend bool operator==(const VElement& x, const VElement& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const VElement& x, const VElement& y) { return !(x == y); }

    std::string str() const {
        if (b.is_zero()) return a.str();
        std::string out;
        if (!a.is_zero()) out = a.str();
        if (b == 1) {
            out += out.empty() ? "w" : "+w";
        } else if (b == -1) {
            out += "-w";
        } else {
            if (!out.empty() && b.sign() > 0) out += "+";
            out += b.str() + "w";
        }
        return out;
    }
};

/// a + b w with dyadic coordinates (the set V' of real-coefficient elements,
/// restricted to the dyadics that actually arise from conjugates and quotients).
struct VPrimeElement {
    Dyadic a;
    Dyadic b;

    VPrimeElement() = default;
    VPrimeElement(Dyadic aa, Dyadic bb) : a(std::move(aa)), b(std::move(bb)) {}
    VPrimeElement(const VElement& x) : a(x.a), b(x.b) {}

    friend bool operator==(const VPrimeElement& x, const VPrimeElement& y) {
        return x.a == y.a && x.b == y.b;
    }
};

inline VElement v_add(const VElement& x, const VElement& y) {
    return VElement(x.a + y.a, x.b + y.b);
}

inline VElement v_neg(const VElement& x) { return VElement(-x.a, -x.b); }

inline VElement v_sub(const VElement& x, const VElement& y) {
    return VElement(x.a - y.a, x.b - y.b);
}

/// (a+bw)(c+dw) = (ac - 2^t alpha^2 bd) + (ad + bc + 2 alpha bd) w.
///
/// Both w-reduction terms must land in Z, which requires
/// 2^max(r-1, 2r-t) | bd; otherwise the product leaves V and
/// NonIntegralResult is raised.
inline VElement v_mul(const VElement& x, const VElement& y, const VContext& ctx) {
    BigInt bd = x.b * y.b;
    BigInt cross = x.a * y.b + x.b * y.a;
    Dyadic scalar = Dyadic(x.a * y.a) - Dyadic(bd) * ctx.norm_w();
    Dyadic wcoef = Dyadic(cross) + Dyadic(bd) * ctx.trace_w();
    if (!scalar.is_integer() || !wcoef.is_integer()) {
        throw NonIntegralResult("product leaves V: 2-adic valuation of b*d too small");
    }
    return VElement(scalar.to_integer(), wcoef.to_integer());
}

inline VPrimeElement vp_mul(const VPrimeElement& x, const VPrimeElement& y, const VContext& ctx) {
    Dyadic bd = x.b * y.b;
    return VPrimeElement(x.a * y.a - bd * ctx.norm_w(),
                         x.a * y.b + x.b * y.a + bd * ctx.trace_w());
}

/// n(a+bw) = (a + b alpha)^2 + q (b alpha)^2.
inline Dyadic v_norm(const VElement& x, const VContext& ctx) {
    Dyadic ba = Dyadic(x.b) * ctx.alpha();
    Dyadic first = Dyadic(x.a) + ba;
    return first * first + Dyadic(ctx.q()) * ba * ba;
}

inline Dyadic vp_norm(const VPrimeElement& x, const VContext& ctx) {
    Dyadic ba = x.b * ctx.alpha();
    Dyadic first = x.a + ba;
    return first * first + Dyadic(ctx.q()) * ba * ba;
}

/// Conjugate via the trace: conj(x) = t(x) - x = (a + 2 alpha b) - b w.
/// The scalar coordinate need not be an integer, hence the VPrime result.
inline VPrimeElement v_conj(const VElement& x, const VContext& ctx) {
    return VPrimeElement(Dyadic(x.a) + Dyadic(x.b) * ctx.trace_w(), Dyadic(-x.b));
}

/// Exact quotient x * conj(y) / n(y) as a pair of rationals, returned as
/// (numerator_a, numerator_b, denominator) with a common positive denominator.
struct VQuotient {
    BigInt num_a;
    BigInt num_b;
    BigInt den;
};

inline VQuotient v_exact_quotient(const VElement& x, const VElement& y, const VContext& ctx) {
    if (y.is_zero()) {
        throw DivisionByZero("division by zero in V");
    }
    VPrimeElement prod = vp_mul(VPrimeElement(x), v_conj(y, ctx), ctx);
    Dyadic n = v_norm(y, ctx);
    // Scale everything by 4^r: all three become exact integers.
    int k = 2 * ctx.r;
    return VQuotient{prod.a.scaled_integer(k), prod.b.scaled_integer(k), n.scaled_integer(k)};
}

namespace detail {

inline BigInt nearest_int(const BigInt& num, const BigInt& den) {
    // den > 0; round num/den to the nearest integer, ties toward zero.
    BigInt q = num / den;
    BigInt rem = num - q * den;
    BigInt twice = 2 * (rem.sign() < 0 ? BigInt(-rem) : rem);
    if (twice > den) {
        q += (num.sign() < 0 ? -1 : 1);
    }
    return q;
}

} // namespace detail

/// Division with remainder: x = z y + v with the quotient rounded
/// coordinate-wise to the nearest integers (ties toward zero). For r >= t-1
/// the remainder satisfies n(v) <= (2^r+4)/2^(r+2) * n(y) < n(y).
inline std::pair<VElement, VElement> v_divmod(const VElement& x, const VElement& y,
                                              const VContext& ctx) {
    VQuotient q = v_exact_quotient(x, y, ctx);
    VElement z(detail::nearest_int(q.num_a, q.den), detail::nearest_int(q.num_b, q.den));
    VElement zy = v_mul(z, y, ctx);
    return {z, v_sub(x, zy)};
}

/// Greatest common divisor with Bezout witnesses: delta = gamma x + tau y.
struct GcdResult {
    VElement delta;
    VElement gamma;
    VElement tau;
};

/// Extended Euclid on v_divmod. When the nearest rounding fails to shrink the
/// remainder (possible only at the boundary context (t,r)=(3,1) on exact
/// half-integer quotients), the 3x3 neighborhood of the rounded quotient is
/// searched; a strictly smaller remainder always exists there because the
/// offset-lattice minimum of the norm form is 1/4 + (2^t-1)/2^(2r+2) < 1.
inline GcdResult v_gcd_bezout(VElement x, VElement y, const VContext& ctx) {
    if (x.is_zero() && y.is_zero()) {
        throw BothZero("gcd(0, 0) is undefined");
    }
    // Invariants: cur = cg*x0 + ct*y0, prev = pg*x0 + pt*y0.
    VElement prev = x, cur = y;
    VElement pg(1, 0), pt(0, 0), cg(0, 0), ct(1, 0);
    while (!cur.is_zero()) {
        auto [z, v] = v_divmod(prev, cur, ctx);
        Dyadic nv = v_norm(v, ctx);
        Dyadic ncur = v_norm(cur, ctx);
        if (!(nv < ncur)) {
            VQuotient q = v_exact_quotient(prev, cur, ctx);
            BigInt base_a = detail::nearest_int(q.num_a, q.den);
            BigInt base_b = detail::nearest_int(q.num_b, q.den);
            for (int da = -1; da <= 1 && !(nv < ncur); ++da) {
                for (int db = -1; db <= 1 && !(nv < ncur); ++db) {
                    VElement cand(base_a + da, base_b + db);
                    VElement rem = v_sub(prev, v_mul(cand, cur, ctx));
                    Dyadic nr = v_norm(rem, ctx);
                    if (nr < nv) {
                        z = cand;
                        v = rem;
                        nv = nr;
                    }
                }
            }
            if (!(nv < ncur)) {
                throw Error("euclidean step failed to reduce the norm");
            }
        }
        VElement ng = v_sub(pg, v_mul(z, cg, ctx));
        VElement nt = v_sub(pt, v_mul(z, ct, ctx));
        prev = std::exchange(cur, v);
        pg = std::exchange(cg, ng);
        pt = std::exchange(ct, nt);
    }
    return GcdResult{prev, pg, pt};
}

/// True iff pi | (x - y), i.e. (x-y) * conj(pi) / n(pi) has integer coordinates.
inline bool v_congruent(const VElement& x, const VElement& y, const VElement& pi,
                        const VContext& ctx) {
    if (pi.is_zero()) {
        throw DivisionByZero("congruence modulo zero");
    }
    VQuotient q = v_exact_quotient(v_sub(x, y), pi, ctx);
    return q.num_a % q.den == 0 && q.num_b % q.den == 0;
}

/// Embed into the 2^t-dimensional algebra (the cd_algebra oracle).
inline CdElement v_embed(const VElement& x, const VContext& ctx) {
    return embed_v(x.a, x.b, ctx.t, ctx.r);
}

} // namespace cdcodes
