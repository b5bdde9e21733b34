#pragma once

// Exact rational numbers over BigInt. Always normalized: denominator > 0,
// gcd(num, den) == 1, zero is 0/1. Arithmetic takes an int64 fast path when
// both operands fit, which covers nearly every value this library produces.

#include <cstdint>
#include <string>
#include <string_view>
#include <stdexcept>

#include "hecke/bigint.hpp"

namespace hecke {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(static_cast<long long>(n)), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sgn() const noexcept { return num_.sgn(); }

    long long to_i64() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer: " + to_string());
        return num_.to_i64();
    }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.fast() && b.fast()) {
            return static_cast<__int128>(a.num_.to_i64()) * b.den_.to_i64() <
                   static_cast<__int128>(b.num_.to_i64()) * a.den_.to_i64();
        }
        return BigInt::cmp(a.num_ * b.den_, b.num_ * a.den_) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.fast() && b.fast()) {
            __int128 n = static_cast<__int128>(a.num_.to_i64()) * b.den_.to_i64() +
                         static_cast<__int128>(b.num_.to_i64()) * a.den_.to_i64();
            __int128 d = static_cast<__int128>(a.den_.to_i64()) * b.den_.to_i64();
            return from_i128(n, d);
        }
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational nb(b);
        nb.num_.negate();
        return a + nb;
    }

    Rational operator-() const {
        Rational r(*this);
        r.num_.negate();
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero()) return Rational();
        if (a.fast() && b.fast()) {
            __int128 n = static_cast<__int128>(a.num_.to_i64()) * b.num_.to_i64();
            __int128 d = static_cast<__int128>(a.den_.to_i64()) * b.den_.to_i64();
            return from_i128(n, d);
        }
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        if (a.is_zero()) return Rational();
        if (a.fast() && b.fast()) {
            __int128 n = static_cast<__int128>(a.num_.to_i64()) * b.den_.to_i64();
            __int128 d = static_cast<__int128>(a.den_.to_i64()) * b.num_.to_i64();
            return from_i128(n, d);
        }
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    Rational abs() const { return sgn() < 0 ? -*this : *this; }

    // "p/q" for non-integers, plain integer string otherwise
    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    static Rational from_string(std::string_view s) {
        size_t slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

private:
    BigInt num_, den_;

    bool fast() const noexcept { return num_.fits_i64() && den_.fits_i64(); }

    static Rational from_i128(__int128 n, __int128 d) {
        if (d < 0) { d = -d; n = -n; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        Rational r;
        r.num_ = bigint_from_i128(n);
        r.den_ = bigint_from_i128(d);
        return r;
    }

    static BigInt bigint_from_i128(__int128 v) {
        bool neg = v < 0;
        unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : v;
        BigInt r = BigInt::from_u64(static_cast<uint64_t>(m >> 64));
        r = r.shifted_left(64) + BigInt::from_u64(static_cast<uint64_t>(m));
        if (neg) r.negate();
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        if (den_.sgn() < 0) { num_.negate(); den_.negate(); }
        BigInt g = BigInt::gcd(num_, den_);
        if (!(g == BigInt(1))) { num_ = num_ / g; den_ = den_ / g; }
    }
};

}  // namespace hecke
