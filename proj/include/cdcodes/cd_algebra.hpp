#pragma once

#include <span>
#include <vector>

#include "cdcodes/dyadic.hpp"
#include "cdcodes/errors.hpp"

namespace cdcodes {

/// Doubling depth of A_t(R); dimension is 2^t. Every doubling constant is -1,
/// so the basis satisfies e_i^2 = -1 and e_i e_j = -e_j e_i for i != j.
struct AlgebraParams {
    int t;

    explicit AlgebraParams(int depth) : t(depth) {
        if (t < 1) {
            throw BadParams("algebra depth t must be >= 1");
        }
    }

    std::size_t dimension() const { return std::size_t{1} << t; }
};

namespace detail {

using DySpan = std::span<const Dyadic>;

inline std::vector<Dyadic> cd_conj_span(DySpan x) {
    std::vector<Dyadic> out(x.begin(), x.end());
    for (std::size_t i = 1; i < out.size(); ++i) {
        out[i] = -out[i];
    }
    return out;
}

inline std::vector<Dyadic> cd_add_vec(std::vector<Dyadic> x, const std::vector<Dyadic>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += y[i];
    }
    return x;
}

inline std::vector<Dyadic> cd_sub_vec(std::vector<Dyadic> x, const std::vector<Dyadic>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] -= y[i];
    }
    return x;
}

// (a1,a2)(b1,b2) = (a1 b1 + g b2 conj(a2), conj(a1) b2 + b1 a2) with g = -1,
// applied recursively down to plain scalar multiplication.
inline std::vector<Dyadic> cd_mul_span(DySpan x, DySpan y) {
    const std::size_t n = x.size();
    if (n == 1) {
        return {x[0] * y[0]};
    }
    const std::size_t h = n / 2;
    DySpan a1 = x.first(h), a2 = x.last(h);
    DySpan b1 = y.first(h), b2 = y.last(h);

    std::vector<Dyadic> a2c = cd_conj_span(a2);
    std::vector<Dyadic> a1c = cd_conj_span(a1);
    std::vector<Dyadic> first = cd_sub_vec(cd_mul_span(a1, b1), cd_mul_span(b2, a2c));
    std::vector<Dyadic> second = cd_add_vec(cd_mul_span(a1c, b2), cd_mul_span(b1, a2));

    std::vector<Dyadic> out;
    out.reserve(n);
    out.insert(out.end(), first.begin(), first.end());
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

} // namespace detail

/// Element of A_t(R) with exact dyadic coefficients on the basis 1, e_1, ..., e_{2^t-1}.
class CdElement {
  public:
    CdElement(AlgebraParams params, std::vector<Dyadic> coeffs)
        : params_(params), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != params_.dimension()) {
            throw BadParams("coefficient count does not match algebra dimension");
        }
    }

    static CdElement zero(AlgebraParams params) {
        return CdElement(params, std::vector<Dyadic>(params.dimension()));
    }

    static CdElement one(AlgebraParams params) {
        auto e = zero(params);
        e.coeffs_[0] = Dyadic(1);
        return e;
    }

    static CdElement basis(AlgebraParams params, std::size_t i) {
        auto e = zero(params);
        e.coeffs_.at(i) = Dyadic(1);
        return e;
    }

    const AlgebraParams& params() const { return params_; }
    const std::vector<Dyadic>& coeffs() const { return coeffs_; }
    const Dyadic& operator[](std::size_t i) const { return coeffs_[i]; }

    friend bool operator==(const CdElement& x, const CdElement& y) {
        return x.params_.t == y.params_.t && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const CdElement& x, const CdElement& y) { return !(x == y); }

    friend CdElement operator+(const CdElement& x, const CdElement& y) {
        check_params(x, y);
        return CdElement(x.params_, detail::cd_add_vec(x.coeffs_, y.coeffs_));
    }

    friend CdElement operator-(const CdElement& x, const CdElement& y) {
        check_params(x, y);
        return CdElement(x.params_, detail::cd_sub_vec(x.coeffs_, y.coeffs_));
    }

    friend CdElement operator*(const Dyadic& c, const CdElement& x) {
        std::vector<Dyadic> out = x.coeffs_;
        for (auto& v : out) v = c * v;
        return CdElement(x.params_, std::move(out));
    }

  private:
    static void check_params(const CdElement& x, const CdElement& y) {
        if (x.params_.t != y.params_.t) {
            throw BadParams("algebra parameters mismatch");
        }
    }

    AlgebraParams params_;
    std::vector<Dyadic> coeffs_;
};

inline CdElement cd_mul(const CdElement& x, const CdElement& y) {
    if (x.params().t != y.params().t) {
        throw BadParams("algebra parameters mismatch");
    }
    return CdElement(x.params(), detail::cd_mul_span(x.coeffs(), y.coeffs()));
}

inline CdElement cd_conj(const CdElement& x) {
    return CdElement(x.params(), detail::cd_conj_span(x.coeffs()));
}

inline Dyadic cd_trace(const CdElement& x) { return x[0] + x[0]; }

/// Sum of squared coefficients; this equals x * conj(x) because every
/// doubling constant is -1.
inline Dyadic cd_norm(const CdElement& x) {
    Dyadic n;
    for (const auto& c : x.coeffs()) {
        n += c * c;
    }
    return n;
}

inline void check_wt_params(int t, int r) {
    if (t < 2 || r < 1 || r < t - 2) {
        throw BadParams("require t >= 2 and r >= max(1, t-2)");
    }
}

/// w = alpha (1 + e_1 + ... + e_{2^t-1}) with alpha = 2^-r.
inline CdElement build_w(int t, int r) {
    check_wt_params(t, r);
    return CdElement(AlgebraParams(t),
                     std::vector<Dyadic>(std::size_t{1} << t, Dyadic::one_over_pow2(r)));
}

/// a + b w as an element of A_t(R).
inline CdElement embed_v(const BigInt& a, const BigInt& b, int t, int r) {
    check_wt_params(t, r);
    Dyadic coeff = Dyadic(b) * Dyadic::one_over_pow2(r);
    std::vector<Dyadic> coeffs(std::size_t{1} << t, coeff);
    coeffs[0] += Dyadic(a);
    return CdElement(AlgebraParams(t), std::move(coeffs));
}

} // namespace cdcodes
