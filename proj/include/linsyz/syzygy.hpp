#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "exterior.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "polyring.hpp"

namespace linsyz {

/**
 * Linear strand of a quadric-generated ideal: V_0 = I_2 and, for p >= 1,
 * V_p = ker( Wedge^p V (x) I_2  ->  Wedge^{p-1} V (x) S_3 ) under the Koszul
 * differential. Each space is stored as a canonical reduced echelon basis
 * over the coordinates (wedge set, canonical quadric index), quadric index
 * fastest. spaces[0] is the identity basis of I_2 in its own coordinates.
 */
struct LinearStrand {
    Fp F;
    uint32_t nvars = 0;
    Echelon quadrics;             // canonical basis of I_2 over MonBasis(nvars, 2)
    std::vector<Echelon> spaces;  // V_p for p = 0 .. last computed
    bool terminated = false;      // the last computed space was zero

    size_t q() const { return quadrics.dim(); }

    std::vector<size_t> dims() const {
        std::vector<size_t> d;
        d.reserve(spaces.size());
        for (const Echelon& e : spaces) d.push_back(e.dim());
        return d;
    }
};

namespace detail {

/// Sparse columns of the canonical quadric basis: for each degree-2 monomial,
/// the list of (quadric index, coefficient) hitting it.
inline std::vector<std::vector<std::pair<uint32_t, uint32_t>>>
quadric_columns(const Echelon& quads) {
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> cols(quads.ambient());
    for (size_t t = 0; t < quads.dim(); ++t) {
        const uint32_t* r = quads.rows.row(t);
        for (size_t m = 0; m < quads.ambient(); ++m)
            if (r[m]) cols[m].emplace_back(uint32_t(t), r[m]);
    }
    return cols;
}

inline Echelon echelon_of_rref(const Matrix& rref) {
    std::vector<uint32_t> piv;
    for (size_t i = 0; i < rref.rows(); ++i) {
        size_t j = 0;
        while (j < rref.cols() && rref.at(i, j) == 0) ++j;
        piv.push_back(uint32_t(j));
    }
    return Echelon{rref, piv};
}

} // namespace detail

/**
 * Kernel of the Koszul differential on Wedge^p(n) (x) span(quads), computed
 * against full degree-3 monomial coordinates on the target (the image lies
 * in I_3, so the kernel is unchanged and the rows stay sparse). Rows are
 * streamed by (wedge set of size p-1, cubic monomial); the eliminator exits
 * early once full column rank certifies an empty kernel.
 */
inline Echelon strand_kernel(const Fp& F, uint32_t nvars, uint32_t p, const Echelon& quads) {
    WedgeBasis src(nvars, p), dst(nvars, p - 1);
    size_t q = quads.dim();
    size_t ncols = src.size() * q;
    RowEliminator elim(F, ncols);
    auto cols_by_mon = detail::quadric_columns(quads);
    MonBasis deg2(nvars, 2), deg3(nvars, 3);
    std::vector<std::pair<uint32_t, uint32_t>> row;
    for (size_t bi = 0; bi < dst.size() && !elim.full_column_rank(); ++bi) {
        const auto& B = dst.set(bi);
        uint32_t bmask = WedgeBasis::mask_of(B);
        for (size_t mu = 0; mu < deg3.size(); ++mu) {
            const auto& me = deg3.exps(mu);
            row.clear();
            for (uint32_t j = 0; j < nvars; ++j) {
                if (!me[j] || (bmask & (1u << j))) continue;
                std::vector<uint8_t> nu = me;
                --nu[j];
                const auto& quad_hits = cols_by_mon[deg2.index_of(nu)];
                if (quad_hits.empty()) continue;
                size_t ai = src.index_of_mask(bmask | (1u << j));
                uint32_t sgn = koszul_sign(F, insert_position(B, j));
                for (auto [t, c] : quad_hits)
                    row.emplace_back(uint32_t(ai * q + t), F.mul(sgn, c));
            }
            if (!row.empty()) elim.add_row_sparse(row);
            if (elim.full_column_rank()) break;
        }
    }
    if (elim.full_column_rank()) return Echelon{Matrix(0, ncols), {}};
    return detail::echelon_of_rref(elim.kernel());
}

/// Compute the linear strand of a quadric ideal up to homological index
/// p_max, stopping early at the first zero space.
inline LinearStrand linear_strand(const GradedIdeal& I, uint32_t p_max) {
    if (I.gen_degree != 2) throw std::invalid_argument("linear strand needs a quadric ideal");
    LinearStrand s{I.F, I.nvars, canonical_generators(I), {}, false};
    size_t q = s.q();
    {
        Matrix id(q, q);
        std::vector<uint32_t> piv;
        for (size_t i = 0; i < q; ++i) {
            id.at(i, i) = 1;
            piv.push_back(uint32_t(i));
        }
        s.spaces.push_back(Echelon{id, piv});
    }
    if (q == 0) {
        s.terminated = true;
        return s;
    }
    for (uint32_t p = 1; p <= p_max; ++p) {
        Echelon ker = strand_kernel(I.F, I.nvars, p, s.quadrics);
        bool zero = ker.dim() == 0;
        s.spaces.push_back(std::move(ker));
        if (zero) {
            s.terminated = true;
            break;
        }
    }
    return s;
}

/// Element of V_p in ambient (wedge set, quadric index) coordinates.
struct Syzygy {
    uint32_t p = 0;
    std::vector<uint32_t> coeffs;
};

/// Coordinates of s over the stored basis of V_p, or nullopt if s is not a
/// syzygy of this strand.
inline std::optional<std::vector<uint32_t>> strand_coords(const LinearStrand& st,
                                                          const Syzygy& s) {
    if (s.p >= st.spaces.size()) return std::nullopt;
    return coords_in(st.F, st.spaces[s.p], s.coeffs);
}

struct SyzygyRank {
    size_t rank = 0;
    Echelon linear_span; // reduced echelon rows over the nvars ambient variables
    bool partial_derivative_convention = false;
};

/**
 * Rank of a p-th linear syzygy: the dimension of the span of the linear
 * forms obtained by contracting s against all dual vectors. The span is
 * read off directly from the coefficient slices of s, one potential row per
 * (wedge set of size p-1, quadric index) pair, so no basis of V_{p-1} is
 * needed. For p = 0 the convention is the span of the partial derivatives
 * of the quadric (its rank as a quadratic form, the field being odd), and
 * the result is flagged as such.
 */
inline SyzygyRank syzygy_rank(const LinearStrand& st, const Syzygy& s) {
    const Fp& F = st.F;
    uint32_t n = st.nvars;
    if (s.p == 0) {
        if (s.coeffs.size() != st.q())
            throw std::invalid_argument("syzygy coefficient length mismatch");
        MonBasis deg2(n, 2);
        std::vector<uint32_t> Q(deg2.size(), 0);
        for (size_t t = 0; t < st.q(); ++t) {
            if (!s.coeffs[t]) continue;
            const uint32_t* r = st.quadrics.rows.row(t);
            for (size_t m = 0; m < deg2.size(); ++m)
                Q[m] = F.add(Q[m], F.mul(s.coeffs[t], r[m]));
        }
        RowEliminator e(F, n);
        std::vector<uint32_t> grad(n);
        for (uint32_t i = 0; i < n; ++i) {
            std::fill(grad.begin(), grad.end(), 0);
            for (size_t m = 0; m < deg2.size(); ++m) {
                if (!Q[m]) continue;
                const auto& ex = deg2.exps(m);
                if (!ex[i]) continue;
                std::vector<uint8_t> rest = ex;
                --rest[i];
                uint32_t j = 0;
                while (!rest[j]) ++j;
                grad[j] = F.add(grad[j], F.mul(Q[m], ex[i]));
            }
            e.add_row(grad);
        }
        return SyzygyRank{e.rank(), Echelon{e.rref(), e.pivot_columns()}, true};
    }
    WedgeBasis src(n, s.p), dst(n, s.p - 1);
    size_t q = st.q();
    if (s.coeffs.size() != src.size() * q)
        throw std::invalid_argument("syzygy coefficient length mismatch");
    RowEliminator e(F, n);
    std::vector<uint32_t> row(n);
    for (size_t bi = 0; bi < dst.size(); ++bi) {
        const auto& B = dst.set(bi);
        uint32_t bmask = WedgeBasis::mask_of(B);
        for (size_t t = 0; t < q; ++t) {
            bool nonzero = false;
            std::fill(row.begin(), row.end(), 0);
            for (uint32_t i = 0; i < n; ++i) {
                if (bmask & (1u << i)) continue;
                size_t ai = src.index_of_mask(bmask | (1u << i));
                uint32_t v = s.coeffs[ai * q + t];
                if (!v) continue;
                row[i] = F.mul(koszul_sign(F, insert_position(B, i)), v);
                nonzero = true;
            }
            if (nonzero) e.add_row(row);
        }
    }
    return SyzygyRank{e.rank(), Echelon{e.rref(), e.pivot_columns()}, false};
}

/**
 * The quadric ideal cut out by a syzygy: the span of the quadrics appearing
 * in its wedge slots, returned with a canonical reduced generator basis.
 */
inline GradedIdeal syzygy_scheme(const LinearStrand& st, const Syzygy& s) {
    const Fp& F = st.F;
    uint32_t n = st.nvars;
    WedgeBasis src(n, s.p);
    size_t q = st.q();
    MonBasis deg2(n, 2);
    RowEliminator e(F, deg2.size());
    std::vector<uint32_t> Q(deg2.size());
    for (size_t ai = 0; ai < src.size(); ++ai) {
        bool nonzero = false;
        std::fill(Q.begin(), Q.end(), 0);
        for (size_t t = 0; t < q; ++t) {
            uint32_t v = s.coeffs[ai * q + t];
            if (!v) continue;
            nonzero = true;
            const uint32_t* r = st.quadrics.rows.row(t);
            for (size_t m = 0; m < deg2.size(); ++m) Q[m] = F.add(Q[m], F.mul(v, r[m]));
        }
        if (nonzero) e.add_row(Q);
    }
    return GradedIdeal(F, n, 2, e.rref());
}

namespace detail {

/// Determinant of the p x p submatrix A[rows][cols] over F, by Laplace
/// expansion (p stays tiny here).
inline uint32_t minor_det(const Fp& F, const Matrix& A, const std::vector<uint32_t>& rows,
                          const std::vector<uint32_t>& cols) {
    size_t p = rows.size();
    if (p == 0) return 1;
    if (p == 1) return A.at(rows[0], cols[0]);
    if (p == 2)
        return F.sub(F.mul(A.at(rows[0], cols[0]), A.at(rows[1], cols[1])),
                     F.mul(A.at(rows[0], cols[1]), A.at(rows[1], cols[0])));
    uint32_t acc = 0;
    std::vector<uint32_t> sub(rows.begin() + 1, rows.end());
    std::vector<uint32_t> rem;
    rem.reserve(p - 1);
    for (size_t j = 0; j < p; ++j) {
        uint32_t a = A.at(rows[0], cols[j]);
        if (!a) continue;
        rem.clear();
        for (size_t k = 0; k < p; ++k)
            if (k != j) rem.push_back(cols[k]);
        uint32_t d = minor_det(F, A, sub, rem);
        uint32_t term = F.mul(a, d);
        acc = (j % 2 == 0) ? F.add(acc, term) : F.sub(acc, term);
    }
    return acc;
}

} // namespace detail

/**
 * Push a syzygy through a linear substitution (old variables as linear forms
 * in m new ones): the wedge part picks up p x p minors of the substitution,
 * the quadric payload is substituted and left in degree-2 monomial
 * coordinates of the new ring. Returns the dense image vector indexed by
 * (wedge set over m, degree-2 monomial), monomial fastest.
 */
inline std::vector<uint32_t> substitute_syzygy(const LinearStrand& st, const Syzygy& s,
                                               const Matrix& A) {
    const Fp& F = st.F;
    uint32_t n = st.nvars, m = uint32_t(A.cols());
    WedgeBasis src(n, s.p), dst(m, s.p);
    size_t q = st.q();
    MonBasis deg2_old(n, 2);
    auto tb = bases_up_to(m, 2);
    size_t m2 = tb[2].size();
    // substituted canonical quadrics, once
    Matrix sq(q, m2);
    for (size_t t = 0; t < q; ++t) {
        std::vector<uint32_t> r = substitute_row(F, deg2_old, st.quadrics.rows.row(t), A, tb);
        std::copy(r.begin(), r.end(), sq.row(t));
    }
    std::vector<uint32_t> out(dst.size() * m2, 0);
    for (size_t ai = 0; ai < src.size(); ++ai) {
        // payload carried by wedge slot A
        std::vector<uint32_t> pay(m2, 0);
        bool nonzero = false;
        for (size_t t = 0; t < q; ++t) {
            uint32_t v = s.coeffs[ai * q + t];
            if (!v) continue;
            nonzero = true;
            for (size_t j = 0; j < m2; ++j) pay[j] = F.add(pay[j], F.mul(v, sq.at(t, j)));
        }
        if (!nonzero) continue;
        for (size_t di = 0; di < dst.size(); ++di) {
            uint32_t det = detail::minor_det(F, A, src.set(ai), dst.set(di));
            if (!det) continue;
            for (size_t j = 0; j < m2; ++j)
                out[di * m2 + j] = F.add(out[di * m2 + j], F.mul(det, pay[j]));
        }
    }
    return out;
}

/// Rank of a substituted syzygy directly from its ambient image vector
/// (payload in degree-2 monomial coordinates over m variables).
inline size_t substituted_rank(const Fp& F, uint32_t m, uint32_t p,
                               const std::vector<uint32_t>& img) {
    if (p == 0) throw std::invalid_argument("substituted rank needs p >= 1");
    WedgeBasis src(m, p), dst(m, p - 1);
    size_t m2 = img.size() / src.size();
    RowEliminator e(F, m);
    std::vector<uint32_t> row(m);
    for (size_t bi = 0; bi < dst.size(); ++bi) {
        const auto& B = dst.set(bi);
        uint32_t bmask = WedgeBasis::mask_of(B);
        for (size_t j = 0; j < m2; ++j) {
            bool nonzero = false;
            std::fill(row.begin(), row.end(), 0);
            for (uint32_t i = 0; i < m; ++i) {
                if (bmask & (1u << i)) continue;
                uint32_t v = img[src.index_of_mask(bmask | (1u << i)) * m2 + j];
                if (!v) continue;
                row[i] = F.mul(koszul_sign(F, insert_position(B, i)), v);
                nonzero = true;
            }
            if (nonzero) e.add_row(row);
        }
    }
    return e.rank();
}

struct RankDrop {
    size_t rank_before = 0;
    size_t rank_after = 0;
    bool annihilated_form_in_span = false;
};

/**
 * Restrict a p-th syzygy (p >= 1) to a hyperplane given by a full-rank
 * substitution with n-1 columns, and report the rank before and after
 * together with whether the one linear form annihilated by the substitution
 * lies in the syzygy's linear span. No restricted strand basis is needed.
 */
inline RankDrop rank_drop_check(const LinearStrand& st, const Syzygy& s, const Matrix& A) {
    if (s.p == 0) throw std::invalid_argument("rank drop check needs p >= 1");
    if (A.rows() != st.nvars || A.cols() + 1 != st.nvars)
        throw std::invalid_argument("expected a hyperplane substitution (n rows, n-1 columns)");
    SyzygyRank before = syzygy_rank(st, s);
    std::vector<uint32_t> img = substitute_syzygy(st, s, A);
    size_t after = substituted_rank(st.F, uint32_t(A.cols()), s.p, img);
    RankKernel lk = rank_kernel(st.F, A.transposed());
    if (lk.kernel.rows() != 1)
        throw std::invalid_argument("substitution matrix is rank-deficient");
    bool in_span = coords_in(st.F, before.linear_span, lk.kernel.row_copy(0)).has_value();
    return RankDrop{before.rank, after, in_span};
}

/// Result of restricting a whole strand level along a substitution.
struct StrandRestriction {
    GradedIdeal ideal;        // substituted quadrics (rows may be dependent)
    LinearStrand strand;      // strand of the restricted ideal, up to p
    Matrix map;               // dim V'_p x dim V_p, columns are images of basis vectors
    bool injective = false;
};

/**
 * The induced map V_p -> V'_p on p-th strand spaces along a full-column-rank
 * substitution. Each ambient basis syzygy is pushed through the substitution
 * and re-expressed over the restricted strand's stored basis; the
 * re-expression is asserted to succeed (images of syzygies are syzygies of
 * the restricted ideal).
 */
inline StrandRestriction restrict_syzygies(const LinearStrand& st, const Matrix& A, uint32_t p) {
    if (p >= st.spaces.size()) throw std::invalid_argument("strand not computed to this index");
    GradedIdeal ambient(st.F, st.nvars, 2, st.quadrics.rows);
    GradedIdeal rI = restrict_to_subspace(ambient, A);
    LinearStrand rst = linear_strand(rI, p);
    uint32_t m = uint32_t(A.cols());
    size_t src_dim = st.spaces[p].dim();
    size_t dst_dim = p < rst.spaces.size() ? rst.spaces[p].dim() : 0;
    Matrix map(dst_dim, src_dim);
    MonBasis deg2(m, 2);
    size_t rq = rst.q();
    for (size_t g = 0; g < src_dim; ++g) {
        Syzygy basis_elt{p, st.spaces[p].rows.row_copy(g)};
        std::vector<uint32_t> img = substitute_syzygy(st, basis_elt, A);
        // convert payload from degree-2 monomials to restricted quadric coordinates
        WedgeBasis dst(m, p);
        size_t m2 = deg2.size();
        std::vector<uint32_t> conv(dst.size() * rq, 0);
        for (size_t di = 0; di < dst.size(); ++di) {
            std::vector<uint32_t> slice(img.begin() + long(di * m2),
                                        img.begin() + long((di + 1) * m2));
            auto c = coords_in(st.F, rst.quadrics, slice);
            if (!c) throw std::logic_error("substituted payload escaped the restricted ideal");
            for (size_t t = 0; t < rq; ++t) conv[di * rq + t] = (*c)[t];
        }
        auto coords = coords_in(st.F, rst.spaces[p], conv);
        if (!coords) throw std::logic_error("substituted syzygy escaped the restricted strand");
        for (size_t r = 0; r < dst_dim; ++r) map.at(r, g) = (*coords)[r];
    }
    bool inj = rank_kernel(st.F, map).rank == src_dim;
    return StrandRestriction{std::move(rI), std::move(rst), std::move(map), inj};
}

/// Dense homogeneous polynomial arithmetic helper: multiply a linear form
/// (dense over v variables) into a degree-d form.
inline std::vector<uint32_t> linear_times_form(const Fp& F, uint32_t v,
                                               const std::vector<uint32_t>& lin,
                                               const std::vector<uint32_t>& form,
                                               const MonBasis& from, const MonBasis& to) {
    std::vector<uint32_t> out(to.size(), 0);
    for (size_t t = 0; t < from.size(); ++t) {
        if (!form[t]) continue;
        for (uint32_t j = 0; j < v; ++j) {
            if (!lin[j]) continue;
            size_t idx = to.index_of(MonBasis::times_var(from.exps(t), j));
            out[idx] = F.add(out[idx], F.mul(form[t], lin[j]));
        }
    }
    return out;
}

struct RankLocusProbe {
    size_t minor_count = 0;
    size_t minor_dim = 0; // dimension of the span of the minors
    HilbertProbe probe;
};

/**
 * Determinantal probe of the locus where the universal contraction map of
 * the p-th strand space drops to rank <= r: over the coordinate ring of
 * P(V_p), form the (dim V x dim V_{p-1}) matrix of linear forms whose entry
 * rows are the contractions of the strand basis, generate all (r+1) x (r+1)
 * minors, and run the Hilbert probe of the minor ideal up to degree d_max.
 * Work is bounded by `budget` (minor count times the degree-(r+1) monomial
 * basis size); a probe projected to exceed it throws BudgetExceeded.
 */
inline RankLocusProbe rank_locus_probe(const LinearStrand& st, uint32_t p, uint32_t r,
                                       uint32_t d_max, uint64_t budget) {
    if (p == 0 || p >= st.spaces.size())
        throw std::invalid_argument("rank locus probe needs 1 <= p < computed strand length");
    const Fp& F = st.F;
    uint32_t n = st.nvars;
    size_t v = st.spaces[p].dim();        // probe ring variables
    size_t mprev = st.spaces[p - 1].dim();
    size_t q = st.q();
    if (v == 0) throw std::invalid_argument("strand space is zero");
    WedgeBasis wsrc(n, p), wdst(n, p - 1);
    // contraction coordinates: for each basis syzygy g, an n x mprev matrix
    std::vector<Matrix> contr(v, Matrix(n, mprev));
    for (size_t g = 0; g < v; ++g) {
        std::vector<uint32_t> vec = st.spaces[p].rows.row_copy(g);
        for (uint32_t i = 0; i < n; ++i) {
            std::vector<uint32_t> c = contract(F, wsrc, wdst, q, vec, i);
            auto coords = coords_in(F, st.spaces[p - 1], c);
            if (!coords) throw std::logic_error("contraction escaped the lower strand space");
            for (size_t b = 0; b < mprev; ++b) contr[g].at(i, b) = (*coords)[b];
        }
    }
    uint32_t k = r + 1;
    if (k > n || k > mprev) {
        RankLocusProbe out;
        out.minor_count = 0;
        GradedIdeal empty(F, uint32_t(v), 2, Matrix(0, graded_dim(v, 2)));
        out.probe = hilbert_probe(empty, d_max);
        return out;
    }
    size_t nminors = size_t(binomial(int64_t(n), int64_t(k)).to_int64()) *
                     size_t(binomial(int64_t(mprev), int64_t(k)).to_int64());
    uint64_t cost = uint64_t(nminors) * graded_dim(v, k);
    if (cost > budget)
        throw BudgetExceeded("rank locus probe needs " + std::to_string(cost) +
                             " entries, budget is " + std::to_string(budget));
    auto vb = bases_up_to(uint32_t(v), k);
    // entry (i, b) of the universal matrix is the linear form with
    // coefficient contr[g](i, b) on the g-th probe variable
    auto entry = [&](uint32_t i, size_t b) {
        std::vector<uint32_t> lin(v, 0);
        for (size_t g = 0; g < v; ++g) lin[g] = contr[g].at(i, b);
        return lin;
    };
    // recursive symbolic determinant over the chosen rows/cols
    std::function<std::vector<uint32_t>(const std::vector<uint32_t>&, const std::vector<size_t>&)>
        sdet = [&](const std::vector<uint32_t>& rows,
                   const std::vector<size_t>& cols) -> std::vector<uint32_t> {
        if (rows.size() == 1) return entry(rows[0], cols[0]);
        uint32_t d = uint32_t(rows.size());
        std::vector<uint32_t> acc(vb[d].size(), 0);
        std::vector<uint32_t> sub(rows.begin() + 1, rows.end());
        for (size_t j = 0; j < cols.size(); ++j) {
            std::vector<uint32_t> lin = entry(rows[0], cols[j]);
            bool zero = true;
            for (uint32_t x : lin)
                if (x) zero = false;
            if (zero) continue;
            std::vector<size_t> rem;
            for (size_t t = 0; t < cols.size(); ++t)
                if (t != j) rem.push_back(cols[t]);
            std::vector<uint32_t> inner = sdet(sub, rem);
            std::vector<uint32_t> term =
                linear_times_form(F, uint32_t(v), lin, inner, vb[d - 1], vb[d]);
            for (size_t t = 0; t < acc.size(); ++t)
                acc[t] = (j % 2 == 0) ? F.add(acc[t], term[t]) : F.sub(acc[t], term[t]);
        }
        return acc;
    };
    RowEliminator span(F, vb[k].size());
    std::vector<uint32_t> rowsel;
    std::vector<size_t> colsel;
    std::function<void(uint32_t)> loop_rows;
    std::function<void(size_t)> loop_cols = [&](size_t cstart) {
        if (colsel.size() == k) {
            span.add_row(sdet(rowsel, colsel));
            return;
        }
        for (size_t c = cstart; c + (k - colsel.size()) <= mprev; ++c) {
            colsel.push_back(c);
            loop_cols(c + 1);
            colsel.pop_back();
        }
    };
    loop_rows = [&](uint32_t rstart) {
        if (rowsel.size() == k) {
            loop_cols(0);
            return;
        }
        for (uint32_t i = rstart; i + (k - rowsel.size()) <= n; ++i) {
            rowsel.push_back(i);
            loop_rows(i + 1);
            rowsel.pop_back();
        }
    };
    loop_rows(0);
    RankLocusProbe out;
    out.minor_count = nminors;
    out.minor_dim = span.rank();
    GradedIdeal minors(F, uint32_t(v), k, span.rref());
    out.probe = hilbert_probe(minors, d_max);
    return out;
}

} // namespace linsyz
