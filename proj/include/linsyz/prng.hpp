#pragma once

#include <cstdint>

namespace linsyz {

/**
 * Deterministic PRNG (splitmix64). Used for all randomized constructions so
 * that a (seed, p) pair reproduces identical output on any platform; the
 * standard library engines/distributions are avoided because their streams
 * are not pinned across implementations.
 */
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection; deterministic for a given stream.
    uint64_t below(uint64_t n) {
        uint64_t lim = n * ((~uint64_t(0)) / n);
        uint64_t x;
        do { x = next(); } while (x >= lim);
        return x % n;
    }

    /// Uniform field element in [0, p).
    uint32_t field_elem(uint32_t p) { return uint32_t(below(p)); }

    /// Uniform nonzero field element in [1, p).
    uint32_t field_elem_nonzero(uint32_t p) { return 1 + uint32_t(below(p - 1)); }

private:
    uint64_t state_;
};

} // namespace linsyz
