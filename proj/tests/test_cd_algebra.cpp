#include <catch2/catch_amalgamated.hpp>

#include "cdcodes/cd_algebra.hpp"
#include "cdcodes/rng.hpp"

using namespace cdcodes;

namespace {

CdElement random_element(int t, SplitMix64& rng) {
    std::vector<Dyadic> coeffs;
    for (std::size_t i = 0; i < (std::size_t{1} << t); ++i) {
        long long m = static_cast<long long>(rng.below(21)) - 10;
        int e = static_cast<int>(rng.below(4)) - 2;
        coeffs.emplace_back(m, e);
    }
    return CdElement(AlgebraParams(t), std::move(coeffs));
}

} // namespace

TEST_CASE("quaternion multiplication table from the doubling product") {
    AlgebraParams quat(2);
    auto e = [&](std::size_t i) { return CdElement::basis(quat, i); };
    CdElement one = CdElement::one(quat);
    CdElement minus_one = Dyadic(-1) * one;

    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(cd_mul(e(i), e(i)) == minus_one);
        CHECK(cd_mul(one, e(i)) == e(i));
        CHECK(cd_mul(e(i), one) == e(i));
    }
    // anticommutativity
    for (std::size_t i = 1; i < 4; ++i) {
        for (std::size_t j = 1; j < 4; ++j) {
            if (i == j) continue;
            CHECK(cd_mul(e(i), e(j)) == Dyadic(-1) * cd_mul(e(j), e(i)));
        }
    }
    // signs fixed by the doubling formula with gamma = -1
    CHECK(cd_mul(e(1), e(2)) == Dyadic(-1) * e(3));
    CHECK(cd_mul(e(1), e(3)) == e(2));
    CHECK(cd_mul(e(2), e(3)) == Dyadic(-1) * e(1));
}

TEST_CASE("identity is neutral at every depth") {
    SplitMix64 rng(11);
    for (int t = 1; t <= 5; ++t) {
        CdElement one = CdElement::one(AlgebraParams(t));
        CdElement x = random_element(t, rng);
        CHECK(cd_mul(one, x) == x);
        CHECK(cd_mul(x, one) == x);
    }
}

TEST_CASE("w satisfies its quadratic relation") {
    // w^2 - 2 alpha w + 2^t alpha^2 = 0 across the (t, r) grid
    for (int t = 2; t <= 5; ++t) {
        for (int r = std::max(1, t - 2); r <= t + 3; ++r) {
            CdElement w = build_w(t, r);
            CdElement lhs = cd_mul(w, w);
            Dyadic two_alpha(1, 1 - r);
            Dyadic norm_w(1, t - 2 * r);
            CdElement rhs = two_alpha * w - norm_w * CdElement::one(AlgebraParams(t));
            CHECK(lhs == rhs);
        }
    }
    // t=3, r=1: w*w = -(3/2) + (1/2)(e_1 + ... + e_7)
    CdElement w = build_w(3, 1);
    CdElement ww = cd_mul(w, w);
    CHECK(ww[0] == Dyadic(-3, -1));
    for (std::size_t i = 1; i < 8; ++i) {
        CHECK(ww[i] == Dyadic(1, -1));
    }
}

TEST_CASE("conjugation, trace and norm") {
    AlgebraParams oct(3);
    CdElement one = CdElement::one(oct);
    CdElement x = one + CdElement::basis(oct, 1);
    CdElement conj_x = cd_conj(x);
    CHECK(conj_x[0] == Dyadic(1));
    CHECK(conj_x[1] == Dyadic(-1));
    CHECK(cd_conj(conj_x) == x);

    CdElement w = build_w(3, 1);
    CdElement wc = cd_conj(w);
    CHECK(wc[0] == Dyadic(1, -1));
    for (std::size_t i = 1; i < 8; ++i) {
        CHECK(wc[i] == Dyadic(-1, -1));
    }

    CHECK(cd_trace(w) == Dyadic(1));  // 2 alpha with alpha = 1/2
    CHECK(cd_norm(w) == Dyadic(2));   // 2^3 (1/2)^2
    CHECK(cd_norm(one) == Dyadic(1));
    CHECK(cd_trace(build_w(4, 3)) == Dyadic(1, -2));
    CHECK(cd_norm(build_w(4, 3)) == Dyadic(1, -2)); // 2^4 / 2^6
}

TEST_CASE("norm equals x conj(x) and the vector part vanishes") {
    SplitMix64 rng(22);
    for (int t = 2; t <= 5; ++t) {
        for (int iter = 0; iter < 20; ++iter) {
            CdElement x = random_element(t, rng);
            CdElement prod = cd_mul(x, cd_conj(x));
            CHECK(prod[0] == cd_norm(x));
            for (std::size_t i = 1; i < x.coeffs().size(); ++i) {
                CHECK(prod[i].is_zero());
            }
        }
    }
}

TEST_CASE("flexibility at sampled points") {
    SplitMix64 rng(33);
    for (int t = 2; t <= 5; ++t) {
        for (int iter = 0; iter < 25; ++iter) {
            CdElement x = random_element(t, rng);
            CdElement y = random_element(t, rng);
            CHECK(cd_mul(x, cd_mul(y, x)) == cd_mul(cd_mul(x, y), x));
        }
    }
}

TEST_CASE("powers of w associate every way") {
    for (int t = 2; t <= 5; ++t) {
        int r = std::max(1, t - 1);
        CdElement w = build_w(t, r);
        CdElement w2 = cd_mul(w, w);
        CdElement w3a = cd_mul(w2, w);
        CdElement w3b = cd_mul(w, w2);
        CHECK(w3a == w3b);
        CdElement w5a = cd_mul(cd_mul(w2, w2), w);
        CdElement w5b = cd_mul(w2, cd_mul(w2, w));
        CdElement w5c = cd_mul(w, cd_mul(w2, w2));
        CHECK(w5a == w5b);
        CHECK(w5b == w5c);
    }
}

TEST_CASE("build_w and embed_v golden values") {
    CdElement w31 = build_w(3, 1);
    for (const auto& c : w31.coeffs()) CHECK(c == Dyadic(1, -1));
    CdElement w43 = build_w(4, 3);
    for (const auto& c : w43.coeffs()) CHECK(c == Dyadic(1, -3));
    CdElement w54 = build_w(5, 4);
    for (const auto& c : w54.coeffs()) CHECK(c == Dyadic(1, -4));
    CHECK(w54.coeffs().size() == 32);

    CHECK(embed_v(1, 0, 3, 1) == CdElement::one(AlgebraParams(3)));
    CHECK(embed_v(0, 1, 3, 1) == build_w(3, 1));
    // -1 + 4w at (3,1): scalar coeff 1, vector coeffs 2
    CdElement pi = embed_v(-1, 4, 3, 1);
    CHECK(pi[0] == Dyadic(1));
    for (std::size_t i = 1; i < 8; ++i) {
        CHECK(pi[i] == Dyadic(2));
    }
    CHECK(cd_norm(pi) == Dyadic(29));

    CHECK_THROWS_AS(build_w(1, 1), BadParams);
    CHECK_THROWS_AS(build_w(4, 1), BadParams);
    CHECK_THROWS_AS(build_w(3, 0), BadParams);
}

TEST_CASE("params mismatch is rejected") {
    CdElement a = CdElement::one(AlgebraParams(2));
    CdElement b = CdElement::one(AlgebraParams(3));
    CHECK_THROWS_AS(cd_mul(a, b), BadParams);
}
