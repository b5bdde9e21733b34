#pragma once

// The cyclotomic field Q(zeta_8), zeta = exp(i*pi/4). Elements are stored on
// the power basis 1, zeta, zeta^2, zeta^3 with zeta^4 = -1. This field
// contains both i = zeta^2 and sqrt(2) = zeta - zeta^3, which is exactly what
// the gamma-matrix construction and the normalized root vectors beta/|beta|
// need, so every matrix in the oracle lives here and all arithmetic is exact.

#include <array>
#include <string>
#include <stdexcept>

#include "hecke/rational.hpp"

namespace hecke {

class Zeta8 {
public:
    Zeta8() = default;
    Zeta8(Rational c0) { c_[0] = std::move(c0); }
    Zeta8(long long v) { c_[0] = Rational(v); }
    Zeta8(int v) { c_[0] = Rational(v); }
    Zeta8(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Zeta8 zeta() { return Zeta8(Rational(0), Rational(1), Rational(0), Rational(0)); }
    static Zeta8 i() { return Zeta8(Rational(0), Rational(0), Rational(1), Rational(0)); }
    static Zeta8 sqrt2() { return Zeta8(Rational(0), Rational(1), Rational(0), Rational(-1)); }
    static Zeta8 inv_sqrt2() { return Zeta8(Rational(0), Rational(1, 2), Rational(0), Rational(-1, 2)); }

    const Rational& coeff(int k) const { return c_[k]; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_rational() const {
        return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    const Rational& rational_part() const { return c_[0]; }

    Rational to_rational() const {
        if (!is_rational()) throw std::domain_error("Zeta8: not rational: " + to_string());
        return c_[0];
    }

    friend bool operator==(const Zeta8& a, const Zeta8& b) {
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
    }
    friend bool operator!=(const Zeta8& a, const Zeta8& b) { return !(a == b); }

    friend Zeta8 operator+(const Zeta8& a, const Zeta8& b) {
        return Zeta8(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
    }
    friend Zeta8 operator-(const Zeta8& a, const Zeta8& b) {
        return Zeta8(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]);
    }
    Zeta8 operator-() const { return Zeta8(-c_[0], -c_[1], -c_[2], -c_[3]); }

    friend Zeta8 operator*(const Zeta8& a, const Zeta8& b) {
        // zeta^4 = -1 folds degree-4..6 products back with a sign
        std::array<Rational, 7> t;
        for (int i = 0; i < 4; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                if (b.c_[j].is_zero()) continue;
                t[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Zeta8(t[0] - t[4], t[1] - t[5], t[2] - t[6], t[3]);
    }

    Zeta8& operator+=(const Zeta8& b) { *this = *this + b; return *this; }
    Zeta8& operator-=(const Zeta8& b) { *this = *this - b; return *this; }
    Zeta8& operator*=(const Zeta8& b) { *this = *this * b; return *this; }

    // complex conjugation: zeta -> zeta^-1 = -zeta^3
    Zeta8 conj() const { return Zeta8(c_[0], -c_[3], -c_[2], -c_[1]); }

    // Galois twists zeta -> zeta^3 and zeta -> zeta^5
    Zeta8 galois3() const { return Zeta8(c_[0], c_[3], -c_[2], c_[1]); }
    Zeta8 galois5() const { return Zeta8(c_[0], -c_[1], c_[2], -c_[3]); }

    Zeta8 inverse() const {
        if (is_zero()) throw std::domain_error("Zeta8: division by zero");
        if (is_rational()) return Zeta8(Rational(1) / c_[0]);
        Zeta8 t = galois3() * galois5() * conj();
        Zeta8 n = *this * t;  // field norm, a nonzero rational
        if (!n.is_rational()) throw std::logic_error("Zeta8: norm not rational");
        Rational inv = Rational(1) / n.c_[0];
        return Zeta8(t.c_[0] * inv, t.c_[1] * inv, t.c_[2] * inv, t.c_[3] * inv);
    }

    friend Zeta8 operator/(const Zeta8& a, const Zeta8& b) { return a * b.inverse(); }

    std::string to_string() const {
        static const char* names[4] = {"", "z", "z^2", "z^3"};
        std::string out;
        for (int k = 0; k < 4; ++k) {
            if (c_[k].is_zero()) continue;
            std::string term = c_[k].to_string();
            if (k > 0) {
                if (term == "1") term = names[k];
                else if (term == "-1") term = std::string("-") + names[k];
                else term += std::string("*") + names[k];
            }
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out.empty() ? "0" : out;
    }

private:
    std::array<Rational, 4> c_{};
};

}  // namespace hecke
