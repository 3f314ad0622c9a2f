#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "cdcodes/errors.hpp"

namespace cdcodes {

using BigInt = boost::multiprecision::cpp_int;

/// Exact number of the form mantissa * 2^exponent.
///
/// Canonical form: the mantissa is odd or zero, and zero carries exponent 0.
/// All arithmetic is exact; there is no rounding anywhere in this type.
class Dyadic {
  public:
    Dyadic() = default;

    Dyadic(const BigInt& mantissa) : mant_(mantissa) { normalize(); }
    Dyadic(long long mantissa) : mant_(mantissa) { normalize(); }

    Dyadic(BigInt mantissa, int exponent) : mant_(std::move(mantissa)), exp_(exponent) {
        normalize();
    }

    /// 2^-r, the alpha of a context.
    static Dyadic one_over_pow2(int r) { return Dyadic(1, -r); }

    const BigInt& mantissa() const { return mant_; }
    int exponent() const { return exp_; }

    bool is_zero() const { return mant_.is_zero(); }
    int sign() const { return mant_.sign(); }

    bool is_integer() const { return exp_ >= 0 || mant_.is_zero(); }

    /// Exact integer value; requires is_integer().
    BigInt to_integer() const {
        if (!is_integer()) {
            throw NonIntegralResult("dyadic value is not an integer");
        }
        return mant_ << exp_;
    }

    /// Value scaled by 2^k, which must be an integer (exp + k >= 0).
    BigInt scaled_integer(int k) const {
        if (mant_.is_zero()) {
            return BigInt(0);
        }
        if (exp_ + k < 0) {
            throw NonIntegralResult("scaled dyadic value is not an integer");
        }
        return mant_ << (exp_ + k);
    }

    Dyadic times_pow2(int k) const {
        if (mant_.is_zero()) {
            return Dyadic();
        }
        return raw(mant_, exp_ + k);
    }

    friend Dyadic operator+(const Dyadic& x, const Dyadic& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        int e = std::min(x.exp_, y.exp_);
        return Dyadic((x.mant_ << (x.exp_ - e)) + (y.mant_ << (y.exp_ - e)), e);
    }

    friend Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }

    Dyadic operator-() const { return raw(-mant_, exp_); }

    friend Dyadic operator*(const Dyadic& x, const Dyadic& y) {
        if (x.is_zero() || y.is_zero()) return Dyadic();
        return raw(x.mant_ * y.mant_, x.exp_ + y.exp_);
    }

    Dyadic& operator+=(const Dyadic& y) { return *this = *this + y; }
    Dyadic& operator-=(const Dyadic& y) { return *this = *this - y; }
    Dyadic& operator*=(const Dyadic& y) { return *this = *this * y; }

    friend bool operator==(const Dyadic& x, const Dyadic& y) {
        return x.exp_ == y.exp_ && x.mant_ == y.mant_;
    }
    friend bool operator!=(const Dyadic& x, const Dyadic& y) { return !(x == y); }

    friend bool operator<(const Dyadic& x, const Dyadic& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Dyadic& x, const Dyadic& y) { return y < x; }
    friend bool operator<=(const Dyadic& x, const Dyadic& y) { return !(y < x); }
    friend bool operator>=(const Dyadic& x, const Dyadic& y) { return !(x < y); }

    Dyadic abs() const { return sign() < 0 ? -*this : *this; }

    /// Decimal rendering "m" or "m/2^k" or "m*2^k"; exact.
    std::string str() const {
        if (exp_ == 0) return mant_.str();
        if (exp_ > 0) return BigInt(mant_ << exp_).str();
        return mant_.str() + "/" + BigInt(BigInt(1) << -exp_).str();
    }

  private:
    static Dyadic raw(BigInt m, int e) {
        Dyadic d;
        d.mant_ = std::move(m);
        d.exp_ = e;
        d.normalize();
        return d;
    }

    void normalize() {
        if (mant_.is_zero()) {
            exp_ = 0;
            return;
        }
        unsigned shift = boost::multiprecision::lsb(boost::multiprecision::abs(mant_));
        if (shift > 0) {
            mant_ >>= shift;
            exp_ += static_cast<int>(shift);
        }
    }

    BigInt mant_ = 0;
    int exp_ = 0;
};

} // namespace cdcodes
