#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exactint.hpp"

namespace linsyz {

/**
 * Dimension of the irreducible GL_n representation with highest weight the
 * partition lambda, by the hook content formula: the product over cells
 * (i, j) of (n + j - i) / hook(i, j). Running numerator and denominator are
 * reduced by gcd at every cell so the intermediates stay small.
 */
inline Int128 schur_dim(const std::vector<int64_t>& lambda, uint32_t n) {
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("partition entries must be nonnegative");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw std::invalid_argument("partition must be weakly decreasing");
    }
    std::vector<int64_t> lam;
    for (int64_t x : lambda)
        if (x > 0) lam.push_back(x);
    if (lam.size() > n) return Int128(0);
    if (lam.empty()) return Int128(1);
    std::vector<int64_t> conj(size_t(lam[0]), 0);
    for (size_t i = 0; i < lam.size(); ++i)
        for (int64_t j = 0; j < lam[i]; ++j) ++conj[size_t(j)];
    Int128 num(1), den(1);
    for (size_t i = 0; i < lam.size(); ++i) {
        for (int64_t j = 0; j < lam[i]; ++j) {
            int64_t content = j - int64_t(i);
            int64_t hook = lam[i] - j + conj[size_t(j)] - int64_t(i) - 1;
            num = num * Int128(int64_t(n) + content);
            den = den * Int128(hook);
            Int128 g = gcd(num, den);
            num = num / g;
            den = den / g;
        }
    }
    return num / den;
}

/**
 * Strand space dimensions of the Pfaffian quadric ideal of the Grassmannian
 * of 2-planes in n-space, in its Pluecker embedding: for p = 0 .. n-4 the
 * p-th space is the irreducible with highest weight (p+1, 1^{p+3}).
 */
inline std::vector<Int128> grass_strand_dims(uint32_t n) {
    if (n < 4) throw std::invalid_argument("need n >= 4");
    std::vector<Int128> out;
    for (uint32_t p = 0; p + 4 <= n; ++p) {
        std::vector<int64_t> lam{int64_t(p) + 1};
        for (uint32_t t = 0; t < p + 3; ++t) lam.push_back(1);
        out.push_back(schur_dim(lam, n));
    }
    return out;
}

/// Closed-form counts attached to a general canonical curve of genus 2k.
struct CountTable {
    uint32_t k = 0;
    Int128 strand_dim_betti;     // (k-1) C(2k-2, k) - k C(2k-2, k+1)
    Int128 strand_dim_binomial;  // C(2k-1, k-2)
    Int128 dual_grass_degree;    // C(2k, k) / (k+1)
    Int128 w1_degree;            // degree of the divisorial pencil locus
    Int128 scrollar_line_count;  // lines on the scrollar components
};

inline CountTable count_table(uint32_t k) {
    if (k < 2) throw std::invalid_argument("need k >= 2");
    CountTable t;
    t.k = k;
    int64_t kk = k;
    t.strand_dim_betti =
        Int128(kk - 1) * binomial(2 * kk - 2, kk) - Int128(kk) * binomial(2 * kk - 2, kk + 1);
    t.strand_dim_binomial = binomial(2 * kk - 1, kk - 2);
    Int128 catalan = binomial(2 * kk, kk) / Int128(kk + 1);
    t.dual_grass_degree = catalan;
    t.w1_degree = catalan;
    t.scrollar_line_count = catalan;
    return t;
}

/// Dimension of the p-th linear strand space of a general canonical curve of
/// genus g: max(0, (p+1) C(g-2, p+2) - (g-p-2) C(g-2, g-p-1)).
inline Int128 expected_strand_dim(uint32_t g, uint32_t p) {
    int64_t gg = g, pp = p;
    Int128 val = Int128(pp + 1) * binomial(gg - 2, pp + 2) -
                 Int128(gg - pp - 2) * binomial(gg - 2, gg - pp - 1);
    return val < Int128(0) ? Int128(0) : val;
}

} // namespace linsyz
