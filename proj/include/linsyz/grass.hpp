#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "exterior.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "polyring.hpp"
#include "syzygy.hpp"

namespace linsyz {

/// Pluecker coordinates for 2-planes in n-space: one variable u_{ij} per
/// pair i < j, ordered like the lexicographic wedge basis of pairs.
inline std::vector<std::string> pluecker_names(uint32_t n) {
    WedgeBasis pairs(n, 2);
    std::vector<std::string> names;
    names.reserve(pairs.size());
    for (size_t t = 0; t < pairs.size(); ++t) {
        const auto& s = pairs.set(t);
        std::string nm = "u";
        if (n > 10) nm += std::to_string(s[0]) + "_" + std::to_string(s[1]);
        else nm += std::to_string(s[0]) + std::to_string(s[1]);
        names.push_back(nm);
    }
    return names;
}

/// The quadric u_ab u_cd - u_ac u_bd + u_ad u_bc attached to a 4-subset
/// {a<b<c<d}, as a coefficient row over the degree-2 monomials in the
/// C(n,2) Pluecker variables.
inline std::vector<uint32_t> pfaffian_row(const Fp& F, uint32_t n,
                                          const std::vector<uint32_t>& s) {
    if (s.size() != 4) throw std::invalid_argument("need a 4-subset");
    WedgeBasis pairs(n, 2);
    MonBasis deg2(uint32_t(pairs.size()), 2);
    std::vector<uint32_t> row(deg2.size(), 0);
    uint32_t a = s[0], b = s[1], c = s[2], d = s[3];
    auto put = [&](uint32_t i1, uint32_t j1, uint32_t i2, uint32_t j2, bool pos) {
        size_t v1 = pairs.index_of({i1, j1}), v2 = pairs.index_of({i2, j2});
        std::vector<uint8_t> e(pairs.size(), 0);
        ++e[v1];
        ++e[v2];
        size_t m = deg2.index_of(e);
        row[m] = F.add(row[m], pos ? 1u : F.modulus() - 1);
    };
    put(a, b, c, d, true);
    put(a, c, b, d, false);
    put(a, d, b, c, true);
    return row;
}

/// The full Pfaffian quadric ideal of the Pluecker embedding of 2-planes in
/// n-space: C(n,4) independent quadrics in C(n,2) variables.
inline GradedIdeal pluecker_ideal(const Fp& F, uint32_t n) {
    if (n < 4 || n > 8) throw std::invalid_argument("supported range is 4 <= n <= 8");
    WedgeBasis quads(n, 4);
    MonBasis deg2(uint32_t(WedgeBasis(n, 2).size()), 2);
    Matrix gens(quads.size(), deg2.size());
    for (size_t t = 0; t < quads.size(); ++t) {
        std::vector<uint32_t> row = pfaffian_row(F, n, quads.set(t));
        std::copy(row.begin(), row.end(), gens.row(t));
    }
    return GradedIdeal(F, uint32_t(WedgeBasis(n, 2).size()), 2, std::move(gens),
                       pluecker_names(n));
}

struct PfaffianForm {
    bool in_pfaffian_span = false;
    bool decomposable = false;
    std::vector<uint32_t> omega; // coordinates over the 4-subset wedge basis
};

/**
 * Decide whether a quadric in the Pluecker variables is the Pfaffian of a
 * decomposable 4-form: express it over the C(n,4) basic Pfaffians (they are
 * independent, so the expression omega is unique when it exists), then test
 * decomposability of omega by the rank of its contraction map, which is 4
 * exactly for nonzero decomposable forms. The zero quadric is reported as
 * not decomposable.
 */
inline PfaffianForm generalized_pfaffian(const Fp& F, uint32_t n,
                                         const std::vector<uint32_t>& quad) {
    WedgeBasis quads(n, 4), triples(n, 3);
    MonBasis deg2(uint32_t(WedgeBasis(n, 2).size()), 2);
    if (quad.size() != deg2.size()) throw std::invalid_argument("quadric row length mismatch");
    Matrix pf(quads.size(), deg2.size());
    for (size_t t = 0; t < quads.size(); ++t) {
        std::vector<uint32_t> row = pfaffian_row(F, n, quads.set(t));
        std::copy(row.begin(), row.end(), pf.row(t));
    }
    Matrix b(quad.size(), 1);
    for (size_t m = 0; m < quad.size(); ++m) b.at(m, 0) = quad[m];
    auto x = solve(F, pf.transposed(), b);
    PfaffianForm out;
    if (!x) return out;
    out.in_pfaffian_span = true;
    out.omega.resize(quads.size());
    bool zero = true;
    for (size_t t = 0; t < quads.size(); ++t) {
        out.omega[t] = x->at(t, 0);
        if (out.omega[t]) zero = false;
    }
    if (zero) return out;
    Matrix contr(n, triples.size());
    for (size_t t = 0; t < quads.size(); ++t) {
        if (!out.omega[t]) continue;
        const auto& A = quads.set(t);
        for (size_t pos = 0; pos < 4; ++pos) {
            std::vector<uint32_t> T = A;
            T.erase(T.begin() + long(pos));
            size_t ti = triples.index_of(T);
            contr.at(A[pos], ti) =
                F.add(contr.at(A[pos], ti), F.mul(koszul_sign(F, pos), out.omega[t]));
        }
    }
    out.decomposable = rank_kernel(F, contr).rank == 4;
    return out;
}

struct GrassSyzygy {
    Syzygy syzygy;          // element of V_{n-4} of the Pfaffian ideal
    Echelon linear_span;    // equals the span of { u wedge e_j }
    size_t rank = 0;        // n - 1
};

/**
 * The distinguished minimal-rank syzygy attached to a vector u in the
 * n-space: the payload space is the image of u ^ Wedge^3 under the
 * isomorphism sending a 4-subset wedge to its Pfaffian quadric, and the
 * syzygy spans the one-dimensional kernel of the Koszul differential of
 * index p = n-4 restricted to that payload. Its linear span is asserted to
 * be u ^ (ambient space) inside the Pluecker coordinates, of rank n-1.
 */
inline GrassSyzygy minimal_syzygy(const Fp& F, uint32_t n, const std::vector<uint32_t>& u) {
    if (n < 5 || n > 8) throw std::invalid_argument("supported range is 5 <= n <= 8");
    if (u.size() != n) throw std::invalid_argument("vector length mismatch");
    bool zero = true;
    for (uint32_t x : u)
        if (x % F.modulus()) zero = false;
    if (zero) throw std::invalid_argument("need a nonzero vector");
    uint32_t p = n - 4;
    WedgeBasis pairs(n, 2), triples(n, 3), quads(n, 4);
    MonBasis deg2(uint32_t(pairs.size()), 2);
    GradedIdeal I = pluecker_ideal(F, n);
    Echelon full = canonical_generators(I);
    // payload: u ^ e_j ^ e_k ^ e_l over all triples, mapped to quadrics
    RowEliminator pay(F, deg2.size());
    for (size_t ti = 0; ti < triples.size(); ++ti) {
        const auto& T = triples.set(ti);
        uint32_t tmask = WedgeBasis::mask_of(T);
        std::vector<uint32_t> qrow(deg2.size(), 0);
        bool nz = false;
        for (uint32_t i = 0; i < n; ++i) {
            uint32_t ui = u[i] % F.modulus();
            if (!ui || (tmask & (1u << i))) continue;
            uint32_t sgn = koszul_sign(F, insert_position(T, i));
            std::vector<uint32_t> prow = pfaffian_row(F, n, [&] {
                std::vector<uint32_t> A = T;
                A.insert(A.begin() + long(insert_position(T, i)), i);
                return A;
            }());
            uint32_t c = F.mul(sgn, ui);
            for (size_t m = 0; m < qrow.size(); ++m)
                qrow[m] = F.add(qrow[m], F.mul(c, prow[m]));
            nz = true;
        }
        if (nz) pay.add_row(qrow);
    }
    Echelon W{pay.rref(), pay.pivot_columns()};
    size_t expected = size_t(binomial(int64_t(n) - 1, 3).to_int64());
    if (W.dim() != expected) throw std::logic_error("payload space has unexpected dimension");
    Echelon ker = strand_kernel(F, uint32_t(pairs.size()), p, W);
    if (ker.dim() != 1) throw std::logic_error("restricted kernel is not a line");
    // expand the payload back over the canonical Pfaffian basis
    size_t q = full.dim();
    Matrix expand(W.dim(), q);
    for (size_t w = 0; w < W.dim(); ++w) {
        auto c = coords_in(F, full, W.rows.row_copy(w));
        if (!c) throw std::logic_error("payload escaped the Pfaffian ideal");
        for (size_t t = 0; t < q; ++t) expand.at(w, t) = (*c)[t];
    }
    WedgeBasis wedge(uint32_t(pairs.size()), p);
    std::vector<uint32_t> coeffs(wedge.size() * q, 0);
    for (size_t ai = 0; ai < wedge.size(); ++ai)
        for (size_t w = 0; w < W.dim(); ++w) {
            uint32_t v = ker.rows.at(0, ai * W.dim() + w);
            if (!v) continue;
            for (size_t t = 0; t < q; ++t)
                coeffs[ai * q + t] = F.add(coeffs[ai * q + t], F.mul(v, expand.at(w, t)));
        }
    GrassSyzygy out;
    out.syzygy = Syzygy{p, std::move(coeffs)};
    // the span of the contractions must be u ^ (ambient space)
    RowEliminator span(F, pairs.size());
    for (uint32_t j = 0; j < n; ++j) {
        std::vector<uint32_t> row(pairs.size(), 0);
        for (uint32_t a = 0; a < n; ++a) {
            uint32_t ua = u[a] % F.modulus();
            if (!ua || a == j) continue;
            size_t v = pairs.index_of({std::min(a, j), std::max(a, j)});
            // u ^ e_j has coordinate u_a on e_a ^ e_j, with sign by order
            row[v] = a < j ? ua : F.neg(ua);
        }
        span.add_row(row);
    }
    Echelon expected_span{span.rref(), span.pivot_columns()};
    LinearStrand shell{F, uint32_t(pairs.size()), full, {}, false};
    SyzygyRank rk = syzygy_rank(shell, out.syzygy);
    if (rk.rank != size_t(n) - 1) throw std::logic_error("syzygy rank is not n-1");
    if (!(rk.linear_span.rows == expected_span.rows))
        throw std::logic_error("linear span is not u ^ ambient");
    out.linear_span = rk.linear_span;
    out.rank = rk.rank;
    return out;
}

} // namespace linsyz
