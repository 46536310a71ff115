#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exactint.hpp"

namespace linsyz {

/**
 * Cohomology of the homogeneous bundle induced by an integral weight on
 * projective space P^{n-1} (n = weight length), by the dotted Weyl action:
 * add the staircase delta = (n, n-1, ..., 1), vanish on ties, otherwise a
 * single cohomology group survives in degree equal to the number of
 * inversions, with dimension given by the Weyl formula for the sorted
 * weight.
 */
struct BottResult {
    bool all_vanish = false;
    uint32_t degree = 0;                  // cohomological degree of the survivor
    std::vector<int64_t> dominant_weight; // sorted mu minus delta
    Int128 dim = Int128(0);
};

inline BottResult bott_cohomology(const std::vector<int64_t>& weight) {
    size_t n = weight.size();
    if (n == 0) throw std::invalid_argument("empty weight");
    std::vector<int64_t> mu(n);
    for (size_t i = 0; i < n; ++i) mu[i] = weight[i] + int64_t(n - i);
    uint32_t inversions = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (mu[i] == mu[j]) return BottResult{true, 0, {}, Int128(0)};
            if (mu[i] < mu[j]) ++inversions;
        }
    std::vector<int64_t> nu = mu;
    std::sort(nu.begin(), nu.end(), std::greater<int64_t>());
    BottResult r;
    r.all_vanish = false;
    r.degree = inversions;
    r.dominant_weight.resize(n);
    for (size_t i = 0; i < n; ++i) r.dominant_weight[i] = nu[i] - int64_t(n - i);
    Int128 num(1), den(1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            num = num * Int128(nu[i] - nu[j]);
            den = den * Int128(int64_t(j - i));
            Int128 g = gcd(num, den);
            num = num / g;
            den = den / g;
        }
    r.dim = num / den;
    return r;
}

/**
 * Weight of the j-th term of the twisted complex on P^{k+1} whose
 * cohomology the vanishing table inspects: length k+2, first entry -j-2,
 * last entry -j, zeros between. Defined for 0 <= j <= k-1; the table
 * expects every group to vanish for j <= k-2 and a single survivor in
 * degree k at j = k-1.
 */
inline std::vector<int64_t> en_term_weight(uint32_t k, uint32_t j) {
    if (k < 2 || j + 1 > k) throw std::invalid_argument("need k >= 2 and j <= k-1");
    std::vector<int64_t> w(size_t(k) + 2, 0);
    w.front() = -int64_t(j) - 2;
    w.back() = -int64_t(j);
    return w;
}

} // namespace linsyz
