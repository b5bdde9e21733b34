#pragma once

// Arbitrary-precision signed integers.
//
// Sign-magnitude representation over base-2^32 limbs (little endian). Values
// of up to four limbs are stored inline, so the rationals built on top of
// this class do not touch the heap in the common case. That matters: the
// Dirac-operator kernels run exact Gaussian elimination over Q(zeta_8) on
// matrices with a few hundred rows, which is tens of millions of small
// rational multiplications.

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <stdexcept>
#include <utility>
#include <bit>

namespace hecke {

class BigInt {
public:
    BigInt() noexcept : sign_(0), size_(0), cap_(kInline) {}

    BigInt(long long v) : BigInt() { assign_i64(v); }
    BigInt(long v) : BigInt() { assign_i64(v); }
    BigInt(int v) : BigInt() { assign_i64(v); }

    static BigInt from_u64(uint64_t v) {
        BigInt r;
        r.sign_ = v == 0 ? 0 : 1;
        while (v) { r.inl_[r.size_++] = static_cast<uint32_t>(v); v >>= 32; }
        return r;
    }

    BigInt(const BigInt& o) : sign_(o.sign_), size_(o.size_), cap_(kInline) {
        if (o.size_ > kInline) {
            cap_ = o.size_;
            heap_ = new uint32_t[cap_];
            std::memcpy(heap_, o.heap_, o.size_ * 4);
        } else {
            std::memcpy(inl_, o.limbs(), o.size_ * 4);
        }
    }

    BigInt(BigInt&& o) noexcept : sign_(o.sign_), size_(o.size_), cap_(o.cap_) {
        if (o.on_heap()) heap_ = o.heap_;
        else std::memcpy(inl_, o.inl_, o.size_ * 4);
        o.sign_ = 0; o.size_ = 0; o.cap_ = kInline;
    }

    BigInt& operator=(const BigInt& o) {
        if (this == &o) return *this;
        if (o.size_ <= cap_) {
            std::memcpy(mutable_limbs(), o.limbs(), o.size_ * 4);
        } else {
            uint32_t* p = new uint32_t[o.size_];
            std::memcpy(p, o.limbs(), o.size_ * 4);
            release();
            heap_ = p; cap_ = o.size_;
        }
        sign_ = o.sign_; size_ = o.size_;
        return *this;
    }

    BigInt& operator=(BigInt&& o) noexcept {
        if (this == &o) return *this;
        release();
        sign_ = o.sign_; size_ = o.size_; cap_ = o.cap_;
        if (o.on_heap()) heap_ = o.heap_;
        else std::memcpy(inl_, o.inl_, o.size_ * 4);
        o.sign_ = 0; o.size_ = 0; o.cap_ = kInline;
        return *this;
    }

    ~BigInt() { release(); }

    bool is_zero() const noexcept { return sign_ == 0; }
    int sgn() const noexcept { return sign_; }
    bool is_odd() const noexcept { return size_ > 0 && (limbs()[0] & 1u); }

    bool fits_i64() const noexcept {
        if (size_ < 2) return true;
        if (size_ > 2) return false;
        uint64_t m = mag_u64();
        if (sign_ > 0) return m <= static_cast<uint64_t>(INT64_MAX);
        return m <= static_cast<uint64_t>(INT64_MAX) + 1;
    }

    long long to_i64() const {
        if (!fits_i64()) throw std::overflow_error("BigInt: does not fit in 64 bits");
        uint64_t m = mag_u64();
        if (sign_ < 0) return static_cast<long long>(~m + 1);  // handles INT64_MIN
        return static_cast<long long>(m);
    }

    void negate() noexcept { sign_ = -sign_; }
    BigInt operator-() const { BigInt r(*this); r.negate(); return r; }
    BigInt abs() const { BigInt r(*this); if (r.sign_ < 0) r.sign_ = 1; return r; }

    friend bool operator==(const BigInt& a, const BigInt& b) noexcept {
        if (a.sign_ != b.sign_ || a.size_ != b.size_) return false;
        return std::memcmp(a.limbs(), b.limbs(), a.size_ * 4) == 0;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) noexcept { return !(a == b); }

    // total order
    friend bool operator<(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) noexcept {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = ucmp(a.limbs(), a.size_, b.limbs(), b.size_);
        return a.sign_ >= 0 ? c : -c;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        // int64 fast path
        if (a.size_ <= 1 && b.size_ <= 1) {
            long long r = a.small_i64() + b.small_i64();
            return BigInt(r);
        }
        BigInt r;
        if (a.sign_ == b.sign_) {
            uadd(r, a, b);
            r.sign_ = a.sign_;
        } else {
            int c = ucmp(a.limbs(), a.size_, b.limbs(), b.size_);
            if (c == 0) return BigInt();
            if (c > 0) { usub(r, a, b); r.sign_ = a.sign_; }
            else       { usub(r, b, a); r.sign_ = b.sign_; }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) return a;
        BigInt nb(b); nb.negate();
        return a + nb;
    }

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        if (a.size_ == 1 && b.size_ == 1) {
            uint64_t p = static_cast<uint64_t>(a.limbs()[0]) * b.limbs()[0];
            r.inl_[0] = static_cast<uint32_t>(p);
            r.inl_[1] = static_cast<uint32_t>(p >> 32);
            r.size_ = r.inl_[1] ? 2 : 1;
        } else {
            umul(r, a, b);
        }
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend; a == q*b + r always.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        udivmod(a, b, q, r);
        q.sign_ = q.size_ ? a.sign_ * b.sign_ : 0;
        r.sign_ = r.size_ ? a.sign_ : 0;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    // gcd of magnitudes; gcd(0, b) = |b|.
    static BigInt gcd(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b.abs();
        if (b.sign_ == 0) return a.abs();
        if (a.size_ <= 2 && b.size_ <= 2) {
            uint64_t x = a.mag_u64(), y = b.mag_u64();
            while (y) { uint64_t t = x % y; x = y; y = t; }
            return from_u64(x);
        }
        BigInt x = a.abs(), y = b.abs(), q, r;
        while (!y.is_zero()) {
            udivmod(x, y, q, r);
            r.sign_ = r.size_ ? 1 : 0;
            x = std::move(y);
            y = std::move(r);
            r = BigInt();
        }
        return x;
    }

    BigInt shifted_left(unsigned bits) const {
        if (sign_ == 0 || bits == 0) return *this;
        unsigned limbshift = bits / 32, in = bits % 32;
        BigInt r;
        r.reserve(size_ + limbshift + 1);
        uint32_t* d = r.mutable_limbs();
        for (unsigned i = 0; i < limbshift; ++i) d[i] = 0;
        const uint32_t* s = limbs();
        uint32_t carry = 0;
        for (uint32_t i = 0; i < size_; ++i) {
            uint64_t v = (static_cast<uint64_t>(s[i]) << in) | carry;
            d[limbshift + i] = static_cast<uint32_t>(v);
            carry = static_cast<uint32_t>(v >> 32);
        }
        d[limbshift + size_] = carry;
        r.size_ = size_ + limbshift + 1;
        r.sign_ = sign_;
        r.trim();
        return r;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        if (fits_i64()) return std::to_string(to_i64());
        // repeated division by 10^9
        BigInt v = abs(), q, r;
        const BigInt chunk(1000000000LL);
        std::string out;
        while (!v.is_zero()) {
            udivmod(v, chunk, q, r);
            q.sign_ = q.size_ ? 1 : 0;
            uint32_t digits = r.size_ ? r.limbs()[0] : 0;
            std::string part = std::to_string(digits);
            if (!q.is_zero()) part = std::string(9 - part.size(), '0') + part;
            out = part + out;
            v = q;
        }
        if (sign_ < 0) out = "-" + out;
        return out;
    }

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        size_t i = 0;
        if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; i = 1; }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt v;
        const BigInt ten(10);
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in \"" + std::string(s) + "\"");
            v = v * ten + BigInt(s[i] - '0');
        }
        if (neg) v.negate();
        return v;
    }

    static BigInt factorial(int n) {
        BigInt r(1);
        for (int k = 2; k <= n; ++k) r *= BigInt(k);
        return r;
    }

    static BigInt pow2(unsigned e) { return BigInt(1).shifted_left(e); }

private:
    static constexpr uint32_t kInline = 4;

    int8_t sign_;
    uint32_t size_;
    uint32_t cap_;
    union {
        uint32_t inl_[kInline];
        uint32_t* heap_;
    };

    bool on_heap() const noexcept { return cap_ > kInline; }
    const uint32_t* limbs() const noexcept { return on_heap() ? heap_ : inl_; }
    uint32_t* mutable_limbs() noexcept { return on_heap() ? heap_ : inl_; }

    void release() noexcept {
        if (on_heap()) delete[] heap_;
        cap_ = kInline;
    }

    // Ensure capacity, discarding current contents.
    void reserve(uint32_t n) {
        if (n <= cap_) return;
        release();
        heap_ = new uint32_t[n];
        cap_ = n;
    }

    void trim() noexcept {
        const uint32_t* p = limbs();
        while (size_ > 0 && p[size_ - 1] == 0) --size_;
        if (size_ == 0) sign_ = 0;
    }

    void assign_i64(long long v) {
        sign_ = v == 0 ? 0 : (v > 0 ? 1 : -1);
        uint64_t m = v >= 0 ? static_cast<uint64_t>(v)
                            : ~static_cast<uint64_t>(v) + 1;
        size_ = 0;
        while (m) { inl_[size_++] = static_cast<uint32_t>(m); m >>= 32; }
    }

    uint64_t mag_u64() const noexcept {
        uint64_t m = 0;
        const uint32_t* p = limbs();
        if (size_ > 1) m = static_cast<uint64_t>(p[1]) << 32;
        if (size_ > 0) m |= p[0];
        return m;
    }

    long long small_i64() const noexcept {
        // valid for size_ <= 1
        long long v = size_ ? limbs()[0] : 0;
        return sign_ < 0 ? -v : v;
    }

    static int ucmp(const uint32_t* a, uint32_t an, const uint32_t* b, uint32_t bn) noexcept {
        if (an != bn) return an < bn ? -1 : 1;
        for (uint32_t i = an; i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static void uadd(BigInt& r, const BigInt& a, const BigInt& b) {
        const BigInt& big = a.size_ >= b.size_ ? a : b;
        const BigInt& sml = a.size_ >= b.size_ ? b : a;
        r.reserve(big.size_ + 1);
        const uint32_t* x = big.limbs();
        const uint32_t* y = sml.limbs();
        uint32_t* d = r.mutable_limbs();
        uint64_t carry = 0;
        uint32_t i = 0;
        for (; i < sml.size_; ++i) {
            uint64_t s = static_cast<uint64_t>(x[i]) + y[i] + carry;
            d[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        for (; i < big.size_; ++i) {
            uint64_t s = static_cast<uint64_t>(x[i]) + carry;
            d[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        d[i] = static_cast<uint32_t>(carry);
        r.size_ = big.size_ + 1;
        r.trim();
    }

    // requires |a| >= |b|
    static void usub(BigInt& r, const BigInt& a, const BigInt& b) {
        r.reserve(a.size_);
        const uint32_t* x = a.limbs();
        const uint32_t* y = b.limbs();
        uint32_t* d = r.mutable_limbs();
        int64_t borrow = 0;
        uint32_t i = 0;
        for (; i < b.size_; ++i) {
            int64_t s = static_cast<int64_t>(x[i]) - y[i] - borrow;
            borrow = s < 0;
            d[i] = static_cast<uint32_t>(s);
        }
        for (; i < a.size_; ++i) {
            int64_t s = static_cast<int64_t>(x[i]) - borrow;
            borrow = s < 0;
            d[i] = static_cast<uint32_t>(s);
        }
        r.size_ = a.size_;
        r.sign_ = 1;
        r.trim();
    }

    static void umul(BigInt& r, const BigInt& a, const BigInt& b) {
        r.reserve(a.size_ + b.size_);
        uint32_t* d = r.mutable_limbs();
        std::memset(d, 0, (a.size_ + b.size_) * 4);
        const uint32_t* x = a.limbs();
        const uint32_t* y = b.limbs();
        for (uint32_t i = 0; i < a.size_; ++i) {
            uint64_t carry = 0;
            uint64_t xi = x[i];
            for (uint32_t j = 0; j < b.size_; ++j) {
                uint64_t t = xi * y[j] + d[i + j] + carry;
                d[i + j] = static_cast<uint32_t>(t);
                carry = t >> 32;
            }
            d[i + b.size_] = static_cast<uint32_t>(carry);
        }
        r.size_ = a.size_ + b.size_;
        r.sign_ = 1;
        r.trim();
    }

    // magnitude division; q, r receive |a| / |b| and |a| mod |b| with sign unset
    static void udivmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        int c = ucmp(a.limbs(), a.size_, b.limbs(), b.size_);
        if (c < 0) { q = BigInt(); r = a; r.sign_ = r.size_ ? 1 : 0; return; }
        if (a.size_ <= 2 && b.size_ <= 2) {
            uint64_t x = a.mag_u64(), y = b.mag_u64();
            q = from_u64(x / y);
            r = from_u64(x % y);
            return;
        }
        if (b.size_ == 1) {
            udiv_small(a, b.limbs()[0], q, r);
            return;
        }
        udiv_knuth(a, b, q, r);
    }

    static void udiv_small(const BigInt& a, uint32_t d, BigInt& q, BigInt& r) {
        q.reserve(a.size_);
        uint32_t* qd = q.mutable_limbs();
        const uint32_t* x = a.limbs();
        uint64_t rem = 0;
        for (uint32_t i = a.size_; i-- > 0;) {
            uint64_t cur = (rem << 32) | x[i];
            qd[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        q.size_ = a.size_;
        q.sign_ = 1;
        q.trim();
        r = from_u64(rem);
    }

    // Knuth algorithm D; requires b.size_ >= 2 and |a| >= |b|.
    static void udiv_knuth(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        const uint32_t n = b.size_;
        const uint32_t m = a.size_ - n;
        const unsigned s = std::countl_zero(b.limbs()[n - 1]);

        BigInt bn = b.abs().shifted_left(s);
        BigInt an = a.abs().shifted_left(s);
        // an needs exactly a.size_ + 1 limbs of workspace
        std::basic_string<uint32_t> u(a.size_ + 1, 0);
        std::memcpy(u.data(), an.limbs(), an.size_ * 4);
        const uint32_t* v = bn.limbs();

        q.reserve(m + 1);
        uint32_t* qd = q.mutable_limbs();

        const uint64_t base = 1ull << 32;
        for (uint32_t j = m + 1; j-- > 0;) {
            uint64_t top = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = top / v[n - 1];
            uint64_t rhat = top % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (uint32_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffull) - borrow;
                borrow = t < 0;
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            u[j + n] = static_cast<uint32_t>(t);
            if (t < 0) {
                // add back
                --qhat;
                uint64_t c2 = 0;
                for (uint32_t i = 0; i < n; ++i) {
                    uint64_t s2 = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s2);
                    c2 = s2 >> 32;
                }
                u[j + n] = static_cast<uint32_t>(u[j + n] + c2);
            }
            qd[j] = static_cast<uint32_t>(qhat);
        }
        q.size_ = m + 1;
        q.sign_ = 1;
        q.trim();

        // remainder = u[0..n) >> s
        r.reserve(n);
        uint32_t* rd = r.mutable_limbs();
        if (s == 0) {
            std::memcpy(rd, u.data(), n * 4);
        } else {
            for (uint32_t i = 0; i < n; ++i) {
                uint32_t hi = (i + 1 < n) ? u[i + 1] : 0;
                rd[i] = static_cast<uint32_t>((u[i] >> s) | (static_cast<uint64_t>(hi) << (32 - s)));
            }
        }
        r.size_ = n;
        r.sign_ = 1;
        r.trim();
    }
};

}  // namespace hecke
