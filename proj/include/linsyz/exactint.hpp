#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linsyz {

/**
 * Exact signed 128-bit integers with overflow detection. All combinatorial
 * counts in this library (binomials, Weyl and hook-content dimensions,
 * Betti numbers) are computed through this type so that an out-of-range
 * intermediate raises instead of wrapping silently.
 */
class Int128 {
public:
    Int128() : v_(0) {}
    Int128(int64_t x) : v_(x) {}

    static Int128 raw(__int128 x) { Int128 r; r.v_ = x; return r; }
    __int128 get() const { return v_; }

    Int128 operator+(Int128 o) const {
        __int128 r;
        if (__builtin_add_overflow(v_, o.v_, &r)) throw std::overflow_error("Int128 add");
        return raw(r);
    }
    Int128 operator-(Int128 o) const {
        __int128 r;
        if (__builtin_sub_overflow(v_, o.v_, &r)) throw std::overflow_error("Int128 sub");
        return raw(r);
    }
    Int128 operator*(Int128 o) const {
        __int128 r;
        if (__builtin_mul_overflow(v_, o.v_, &r)) throw std::overflow_error("Int128 mul");
        return raw(r);
    }
    /// Division that must be exact; throws if a remainder is left.
    Int128 operator/(Int128 o) const {
        if (o.v_ == 0) throw std::domain_error("Int128 div by zero");
        if (v_ % o.v_ != 0) throw std::domain_error("Int128 inexact division");
        return raw(v_ / o.v_);
    }

    bool operator==(Int128 o) const { return v_ == o.v_; }
    bool operator!=(Int128 o) const { return v_ != o.v_; }
    bool operator<(Int128 o) const { return v_ < o.v_; }
    bool operator<=(Int128 o) const { return v_ <= o.v_; }
    bool operator>(Int128 o) const { return v_ > o.v_; }
    bool operator>=(Int128 o) const { return v_ >= o.v_; }

    bool fits_int64() const {
        return v_ >= INT64_MIN && v_ <= INT64_MAX;
    }
    int64_t to_int64() const {
        if (!fits_int64()) throw std::overflow_error("Int128 does not fit int64");
        return int64_t(v_);
    }

    std::string str() const {
        if (v_ == 0) return "0";
        __int128 x = v_;
        bool neg = x < 0;
        if (neg) x = -x;
        std::string s;
        while (x > 0) { s.push_back(char('0' + int(x % 10))); x /= 10; }
        if (neg) s.push_back('-');
        return std::string(s.rbegin(), s.rend());
    }

private:
    __int128 v_;
};

/// Exact binomial coefficient; C(n, k) = 0 for k < 0 or k > n.
inline Int128 binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n || n < 0) return Int128(0);
    if (k > n - k) k = n - k;
    Int128 r(1);
    for (int64_t i = 1; i <= k; ++i)
        r = r * Int128(n - k + i) / Int128(i);
    return r;
}

inline Int128 gcd(Int128 a, Int128 b) {
    __int128 x = a.get() < 0 ? -a.get() : a.get();
    __int128 y = b.get() < 0 ? -b.get() : b.get();
    while (y != 0) {
        __int128 t = x % y;
        x = y;
        y = t;
    }
    return Int128::raw(x);
}

} // namespace linsyz
