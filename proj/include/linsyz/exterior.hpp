#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "polyring.hpp"

namespace linsyz {

/**
 * Basis of the p-th exterior power of an n-dimensional space with ordered
 * basis e_0 > e_1 > ... : all strictly increasing p-subsets of {0..n-1} in
 * lexicographic order. Subsets are stored sorted ascending; the empty set is
 * the single basis element of the 0-th power.
 */
class WedgeBasis {
public:
    WedgeBasis(uint32_t n, uint32_t p) : n_(n), p_(p) {
        if (n > 31) throw std::invalid_argument("wedge basis limited to n <= 31");
        if (p > n) return; // empty basis, size 0
        std::vector<uint32_t> cur;
        emit(cur, 0);
    }

    uint32_t n() const { return n_; }
    uint32_t p() const { return p_; }
    size_t size() const { return sets_.size(); }
    const std::vector<uint32_t>& set(size_t idx) const { return sets_[idx]; }

    static uint32_t mask_of(const std::vector<uint32_t>& s) {
        uint32_t m = 0;
        for (uint32_t x : s) m |= 1u << x;
        return m;
    }

    size_t index_of(const std::vector<uint32_t>& s) const { return index_of_mask(mask_of(s)); }

    size_t index_of_mask(uint32_t mask) const {
        auto it = lookup_.find(mask);
        if (it == lookup_.end()) throw std::logic_error("subset outside wedge basis");
        return it->second;
    }

    bool contains_mask(uint32_t mask) const { return lookup_.count(mask) != 0; }

private:
    void emit(std::vector<uint32_t>& cur, uint32_t next) {
        if (cur.size() == p_) {
            lookup_[mask_of(cur)] = sets_.size();
            sets_.push_back(cur);
            return;
        }
        for (uint32_t x = next; x + (p_ - uint32_t(cur.size())) <= n_; ++x) {
            cur.push_back(x);
            emit(cur, x + 1);
            cur.pop_back();
        }
    }

    uint32_t n_, p_;
    std::vector<std::vector<uint32_t>> sets_;
    std::unordered_map<uint32_t, size_t> lookup_;
};

/// Sign (+1 as 1, -1 as p-1 in F) of extracting the element at 0-based
/// position `pos` of an increasing tuple: the Koszul differential assigns
/// alternating signs starting with + at the first position.
inline uint32_t koszul_sign(const Fp& F, size_t pos) {
    return (pos % 2 == 0) ? 1u : F.modulus() - 1;
}

/// Position j would occupy if inserted into the sorted set `s` (j not in s).
inline size_t insert_position(const std::vector<uint32_t>& s, uint32_t j) {
    size_t pos = 0;
    while (pos < s.size() && s[pos] < j) ++pos;
    return pos;
}

/// Sign of the shuffle permutation sorting the concatenation (A, B) of two
/// disjoint increasing tuples: +1 or -1.
inline int shuffle_sign(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    size_t inv = 0;
    for (uint32_t x : a)
        for (uint32_t y : b)
            if (x > y) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

/**
 * Matrix of the Koszul differential
 *   e_{a_1..a_p} (x) f  |->  sum_j (-1)^{j+1} e_{a_1..^a_j..a_p} (x) (x_{a_j} f)
 * acting on Wedge^p(n) tensor a payload space, where mult[j] is the matrix of
 * multiplication by x_j from the payload into a raised space (one matrix per
 * variable, all of equal shape raised_dim x payload_dim).
 *
 * Columns are indexed by (wedge set A, payload index t) with t fastest;
 * rows by (wedge set B of size p-1, raised index r) with r fastest.
 */
inline Matrix koszul_matrix(const Fp& F, uint32_t n, uint32_t p,
                            const std::vector<Matrix>& mult) {
    if (p == 0) throw std::invalid_argument("differential needs p >= 1");
    if (mult.size() != n) throw std::invalid_argument("need one multiplication matrix per variable");
    size_t payload = mult[0].cols(), raised = mult[0].rows();
    for (const Matrix& m : mult)
        if (m.cols() != payload || m.rows() != raised)
            throw std::invalid_argument("multiplication matrices must share one shape");
    WedgeBasis src(n, p), dst(n, p - 1);
    Matrix out(dst.size() * raised, src.size() * payload);
    for (size_t ai = 0; ai < src.size(); ++ai) {
        const auto& A = src.set(ai);
        for (size_t pos = 0; pos < A.size(); ++pos) {
            std::vector<uint32_t> B = A;
            B.erase(B.begin() + long(pos));
            size_t bi = dst.index_of(B);
            uint32_t sgn = koszul_sign(F, pos);
            const Matrix& mj = mult[A[pos]];
            for (size_t r = 0; r < raised; ++r)
                for (size_t t = 0; t < payload; ++t)
                    if (mj.at(r, t))
                        out.at(bi * raised + r, ai * payload + t) =
                            F.add(out.at(bi * raised + r, ai * payload + t),
                                  F.mul(sgn, mj.at(r, t)));
        }
    }
    return out;
}

/// Multiplication by x_j from the full degree-d piece to the degree-(d+1)
/// piece of the polynomial ring, as a 0/1 matrix over the monomial bases.
inline Matrix variable_mult_matrix(uint32_t nvars, uint32_t d, uint32_t j) {
    MonBasis from(nvars, d), to(nvars, d + 1);
    Matrix m(to.size(), from.size());
    for (size_t t = 0; t < from.size(); ++t)
        m.at(to.index_of(MonBasis::times_var(from.exps(t), j)), t) = 1;
    return m;
}

/**
 * Contraction by the dual basis vector of x_i on Wedge^p(n) tensor payload
 * coordinates: e_A (x) f |-> (-1)^{pos of i in A} e_{A minus i} (x) f when
 * i is in A, else 0. Input and output are dense coordinate vectors indexed
 * (wedge set, payload index) with payload fastest.
 */
inline std::vector<uint32_t> contract(const Fp& F, const WedgeBasis& src, const WedgeBasis& dst,
                                      size_t payload, const std::vector<uint32_t>& vec,
                                      uint32_t i) {
    if (src.p() != dst.p() + 1 || src.n() != dst.n())
        throw std::invalid_argument("contraction needs consecutive wedge bases");
    std::vector<uint32_t> out(dst.size() * payload, 0);
    for (size_t ai = 0; ai < src.size(); ++ai) {
        const auto& A = src.set(ai);
        size_t pos = 0;
        while (pos < A.size() && A[pos] != i) ++pos;
        if (pos == A.size()) continue;
        std::vector<uint32_t> B = A;
        B.erase(B.begin() + long(pos));
        size_t bi = dst.index_of(B);
        uint32_t sgn = koszul_sign(F, pos);
        for (size_t t = 0; t < payload; ++t) {
            uint32_t v = vec[ai * payload + t];
            if (!v) continue;
            out[bi * payload + t] = F.add(out[bi * payload + t], F.mul(sgn, v));
        }
    }
    return out;
}

} // namespace linsyz
