#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "cdcodes/rng.hpp"
#include "cdcodes/vring.hpp"

using namespace cdcodes;

namespace {

// Random coordinate whose 2-adic valuation makes every product (including
// quotient-times-divisor products inside divmod) stay inside V.
BigInt closed_coord(const VContext& ctx, SplitMix64& rng, long long range) {
    int val = std::max({0, ctx.r - 1, 2 * ctx.r - ctx.t});
    long long raw = static_cast<long long>(rng.below(2 * range + 1)) - range;
    return BigInt(raw) << val;
}

VElement random_element(const VContext& ctx, SplitMix64& rng, long long range = 40) {
    long long a = static_cast<long long>(rng.below(2 * range + 1)) - range;
    return VElement(a, closed_coord(ctx, rng, range));
}

const std::vector<VContext> kClosedContexts = {
    VContext(2, 1), VContext(2, 2), VContext(3, 1), VContext(3, 2), VContext(3, 3),
    VContext(4, 3), VContext(4, 4), VContext(5, 4), VContext(5, 5),
};

} // namespace

TEST_CASE("context derived constants") {
    VContext ctx(3, 1);
    CHECK(ctx.q() == 7);
    CHECK(ctx.alpha() == Dyadic(1, -1));
    CHECK(ctx.trace_w() == Dyadic(1));
    CHECK(ctx.norm_w() == Dyadic(2));
    CHECK_THROWS_AS(VContext(1, 1), BadParams);
    CHECK_THROWS_AS(VContext(5, 2), BadParams);
}

TEST_CASE("componentwise ring operations") {
    VElement x(1, 2), y(3, -1);
    CHECK(v_add(x, y) == VElement(4, 1));
    CHECK(v_add(x, v_neg(x)) == VElement(0, 0));
    CHECK(v_add(VElement(0, 0), y) == y);
}

TEST_CASE("v_mul golden values at t=3 r=1") {
    VContext ctx(3, 1);
    VElement w(0, 1);
    CHECK(v_mul(w, w, ctx) == VElement(-2, 1)); // w^2 = 2 alpha w - 2  with 2 alpha = 1

    // (1-w)^4 = -1+3w, and (-1+3w) - (-w) = pi = -1+4w
    VElement b(1, -1);
    VElement b2 = v_mul(b, b, ctx);
    CHECK(b2 == VElement(-1, -1));
    VElement b4 = v_mul(b2, b2, ctx);
    CHECK(b4 == VElement(-1, 3));
    CHECK(v_sub(b4, VElement(0, -1)) == VElement(-1, 4));

    VElement x(5, -7);
    CHECK(v_mul(VElement(1, 0), x, ctx) == x);
}

TEST_CASE("v_mul integrality guard") {
    VContext ctx(3, 2); // needs 2 | b*d
    CHECK_THROWS_AS(v_mul(VElement(0, 1), VElement(0, 1), ctx), NonIntegralResult);
    CHECK(v_mul(VElement(0, 2), VElement(0, 1), ctx) == VElement(-1, 1));
    CHECK(v_mul(VElement(3, 1), VElement(4, 0), ctx) == VElement(12, 4)); // d = 0 always closed
}

TEST_CASE("v_norm golden values") {
    CHECK(v_norm(VElement(-1, 4), VContext(3, 1)) == Dyadic(29));
    CHECK(v_norm(VElement(5, 4), VContext(2, 1)) == Dyadic(61));
    CHECK(v_norm(VElement(0, 0), VContext(3, 1)) == Dyadic(0));
    CHECK(v_norm(VElement(-3, 14), VContext(2, 1)) == Dyadic(163));
    CHECK(v_norm(VElement(-5, 14), VContext(2, 1)) == Dyadic(151));
}

TEST_CASE("v_conj golden values and defining property") {
    VContext ctx(3, 1);
    VPrimeElement c = v_conj(VElement(-1, 4), ctx);
    CHECK(c == VPrimeElement(Dyadic(3), Dyadic(-4)));
    CHECK(v_conj(VElement(9, 0), ctx) == VPrimeElement(Dyadic(9), Dyadic(0)));

    SplitMix64 rng(5);
    for (const auto& context : kClosedContexts) {
        for (int iter = 0; iter < 50; ++iter) {
            VElement x = random_element(context, rng);
            VPrimeElement prod = vp_mul(VPrimeElement(x), v_conj(x, context), context);
            CHECK(prod.b.is_zero());
            CHECK(prod.a == v_norm(x, context));
        }
    }
}

TEST_CASE("oracle equivalence with the 2^t-dimensional algebra") {
    SplitMix64 rng(6);
    for (const auto& ctx : kClosedContexts) {
        for (int iter = 0; iter < 1000; ++iter) {
            VElement x = random_element(ctx, rng, 30);
            VElement y = random_element(ctx, rng, 30);
            VElement z = v_mul(x, y, ctx);
            CHECK(v_embed(z, ctx) == cd_mul(v_embed(x, ctx), v_embed(y, ctx)));
        }
    }
}

TEST_CASE("norm is multiplicative on V") {
    SplitMix64 rng(7);
    for (const auto& ctx : kClosedContexts) {
        for (int iter = 0; iter < 1000; ++iter) {
            VElement x = random_element(ctx, rng, 100);
            VElement y = random_element(ctx, rng, 100);
            CHECK(v_norm(v_mul(x, y, ctx), ctx) == v_norm(x, ctx) * v_norm(y, ctx));
        }
    }
}

TEST_CASE("no zero divisors on sampled products") {
    SplitMix64 rng(8);
    VContext ctx(3, 1);
    for (int iter = 0; iter < 500; ++iter) {
        VElement x = random_element(ctx, rng, 20);
        VElement y = random_element(ctx, rng, 20);
        if (!x.is_zero() && !y.is_zero()) {
            CHECK_FALSE(v_mul(x, y, ctx).is_zero());
        }
    }
}

TEST_CASE("v_divmod golden values") {
    VContext ctx(3, 1);
    auto [z, v] = v_divmod(VElement(-1, 3), VElement(-1, 4), ctx);
    CHECK(z == VElement(1, 0));
    CHECK(v == VElement(0, -1));
    CHECK(v_norm(v, ctx) == Dyadic(2));

    VElement y(2, 5);
    auto [zq, vq] = v_divmod(y, y, ctx);
    CHECK(zq == VElement(1, 0));
    CHECK(vq == VElement(0, 0));

    auto [z1, v1] = v_divmod(VElement(1, 0), VElement(-1, 4), ctx);
    CHECK(z1 == VElement(0, 0));
    CHECK(v1 == VElement(1, 0));

    CHECK_THROWS_AS(v_divmod(VElement(1, 0), VElement(0, 0), ctx), DivisionByZero);
}

TEST_CASE("v_divmod division identity and remainder bound") {
    SplitMix64 rng(9);
    // The (2^r+4)/2^(r+2) bound is the r >= t-1 guarantee.
    const std::vector<VContext> contexts = {
        VContext(2, 1), VContext(2, 2), VContext(3, 2), VContext(3, 3),
        VContext(4, 3), VContext(4, 4), VContext(5, 4), VContext(5, 5),
    };
    for (const auto& ctx : contexts) {
        Dyadic bound_num(BigInt((1LL << ctx.r) + 4));
        Dyadic bound = bound_num * Dyadic::one_over_pow2(ctx.r + 2);
        for (int iter = 0; iter < 1250; ++iter) {
            VElement x = random_element(ctx, rng, 60);
            VElement y = random_element(ctx, rng, 60);
            if (y.is_zero()) continue;
            auto [z, v] = v_divmod(x, y, ctx);
            CHECK(v_add(v_mul(z, y, ctx), v) == x);
            CHECK(v_norm(v, ctx) <= bound * v_norm(y, ctx));
        }
    }
}

TEST_CASE("v_gcd_bezout golden values") {
    VContext ctx(3, 1);

    auto g0 = v_gcd_bezout(VElement(5, -7), VElement(0, 0), ctx);
    CHECK(g0.delta == VElement(5, -7));
    CHECK(g0.gamma == VElement(1, 0));
    CHECK(g0.tau == VElement(0, 0));

    // gcd(pi, p) with p = pi conj(pi) is an associate of pi
    auto g1 = v_gcd_bezout(VElement(-1, 4), VElement(29, 0), ctx);
    CHECK(v_norm(g1.delta, ctx) == Dyadic(29));
    CHECK(v_congruent(VElement(0, 0), g1.delta, VElement(-1, 4), ctx));

    // coprime rational integers have unit gcd
    auto g2 = v_gcd_bezout(VElement(2, 0), VElement(3, 0), ctx);
    CHECK(v_norm(g2.delta, ctx) == Dyadic(1));

    CHECK_THROWS_AS(v_gcd_bezout(VElement(0, 0), VElement(0, 0), ctx), BothZero);
}

TEST_CASE("bezout identity and divisibility on random instances") {
    SplitMix64 rng(10);
    const std::vector<VContext> contexts = {VContext(2, 1), VContext(3, 1), VContext(4, 1),
                                            VContext(5, 1)};
    int checked = 0;
    for (const auto& ctx : contexts) {
        for (int iter = 0; iter < 250; ++iter) {
            VElement x = random_element(ctx, rng, 30);
            VElement y = random_element(ctx, rng, 30);
            if (x.is_zero() && y.is_zero()) continue;
            auto g = v_gcd_bezout(x, y, ctx);
            ++checked;
            CHECK(v_add(v_mul(g.gamma, x, ctx), v_mul(g.tau, y, ctx)) == g.delta);
            if (!x.is_zero()) CHECK(v_congruent(x, VElement(0, 0), g.delta, ctx));
            if (!y.is_zero()) CHECK(v_congruent(y, VElement(0, 0), g.delta, ctx));
        }
    }
    CHECK(checked >= 990);
}

TEST_CASE("congruence golden values and equivalence relation") {
    VContext ctx(3, 1);
    VElement pi(-1, 4);
    CHECK(v_congruent(VElement(0, 0), pi, pi, ctx));
    CHECK(v_congruent(VElement(-1, 3), VElement(0, -1), pi, ctx));
    CHECK_FALSE(v_congruent(VElement(1, 0), VElement(0, 0), pi, ctx));
    CHECK_THROWS_AS(v_congruent(VElement(1, 0), VElement(0, 0), VElement(0, 0), ctx),
                    DivisionByZero);

    SplitMix64 rng(12);
    for (int iter = 0; iter < 300; ++iter) {
        VElement x = random_element(ctx, rng, 25);
        VElement y = random_element(ctx, rng, 25);
        VElement z = random_element(ctx, rng, 25);
        CHECK(v_congruent(x, x, pi, ctx));
        CHECK(v_congruent(x, y, pi, ctx) == v_congruent(y, x, pi, ctx));
        if (v_congruent(x, y, pi, ctx) && v_congruent(y, z, pi, ctx)) {
            CHECK(v_congruent(x, z, pi, ctx));
        }
    }
}

namespace {

// x is invertible in V iff its ambient inverse conj(x)/n(x) has integer
// coordinates; when it does, the product is defined and equals 1.
bool is_unit(const VElement& x, const VContext& ctx) {
    if (x.is_zero()) return false;
    VQuotient inv = v_exact_quotient(VElement(1, 0), x, ctx);
    if (inv.num_a % inv.den != 0 || inv.num_b % inv.den != 0) return false;
    VElement y(inv.num_a / inv.den, inv.num_b / inv.den);
    REQUIRE(v_mul(x, y, ctx) == VElement(1, 0));
    return true;
}

} // namespace

TEST_CASE("units are exactly +-1 for t >= 3 at r = 1") {
    for (int t = 3; t <= 5; ++t) {
        VContext ctx(t, 1);
        for (long long a = -20; a <= 20; ++a) {
            for (long long b = -20; b <= 20; ++b) {
                bool expect = (b == 0 && (a == 1 || a == -1));
                CHECK(is_unit(VElement(a, b), ctx) == expect);
            }
        }
    }
}

TEST_CASE("the quaternion context t=2 r=1 has six units") {
    // w = (1 + e1 + e2 + e3)/2 has norm 1 and w(1-w) = 1, so the unit group
    // is the sixth roots of unity, not just {+-1}.
    VContext ctx(2, 1);
    CHECK(v_mul(VElement(0, 1), VElement(1, -1), ctx) == VElement(1, 0));
    std::vector<VElement> units;
    for (long long a = -20; a <= 20; ++a) {
        for (long long b = -20; b <= 20; ++b) {
            if (is_unit(VElement(a, b), ctx)) units.emplace_back(a, b);
        }
    }
    CHECK(units.size() == 6);
    for (const auto& u : units) {
        CHECK(v_norm(u, ctx) == Dyadic(1));
    }
}
