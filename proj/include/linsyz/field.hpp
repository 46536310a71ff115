#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linsyz {

/**
 * Arithmetic in the prime field F_p for a runtime modulus.
 *
 * p is restricted to odd primes below 2^15 so that a product of two
 * reduced residues fits comfortably in 32 bits and row operations can
 * accumulate many multiply-adds in uint32 before reducing (see linalg.hpp).
 * The odd-prime restriction also keeps characteristic-2 corner cases out
 * of the quadric rank convention, which divides by 2.
 */
class Fp {
public:
    explicit Fp(uint32_t p) : p_(p) {
        if (p < 3 || p >= (1u << 15) || !is_prime(p))
            throw std::invalid_argument("modulus must be an odd prime below 2^15, got " +
                                        std::to_string(p));
    }

    uint32_t modulus() const { return p_; }

    uint32_t reduce(uint64_t a) const { return static_cast<uint32_t>(a % p_); }
    uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const { return (a * b) % p_; }

    /// Reduce a possibly negative machine integer into [0, p).
    uint32_t from_int(int64_t a) const {
        int64_t r = a % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        // extended Euclid on (a, p)
        int64_t t = 0, new_t = 1, r = p_, new_r = a % p_;
        while (new_r != 0) {
            int64_t q = r / new_r;
            int64_t tmp = t - q * new_t; t = new_t; new_t = tmp;
            tmp = r - q * new_r; r = new_r; new_r = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<uint32_t>(t);
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t base = a % p_, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(acc);
    }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    uint32_t p_;
};

} // namespace linsyz
