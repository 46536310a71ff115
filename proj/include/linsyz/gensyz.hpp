#pragma once

#include <algorithm>
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

enum class GensyzRegime { reducible, scrollar, pfaffian, general };

enum class PointClass { outside, on_linear_part, on_pfaffian_part, on_both };

/**
 * The universal model of a p-th syzygy of rank r: variables l_0..l_{r-1}
 * (one per linear form) and a_D (one per (r-p-1)-subset D of {0..r-1}),
 * with one quadric
 *   Q_J = sum_t (-1)^t l_{j_t} a_{J minus j_t}
 * per (r-p)-subset J. Variable order is all l's first, then the a's in
 * lexicographic subset order.
 *
 * For r = p+1 the zero set is the union of a hyperplane and a linear space,
 * for r = p+2 the quadrics are the 2x2 minors of a 2 x (p+2) matrix of
 * variables (a scroll), and for r = p+3 they are the first-row 4x4
 * Pfaffians of a skew (p+4) x (p+4) matrix, so the zero set is the cone
 * over a linear section of a Pluecker-embedded Grassmannian of 2-planes.
 */
struct GensyzModel {
    Fp F;
    uint32_t p = 0, r = 0;
    uint32_t n_l = 0;
    WedgeBasis a_index{0, 0};
    uint32_t nvars = 0;
    GradedIdeal equations;
    WedgeBasis eq_index{0, 0};
    GensyzRegime regime = GensyzRegime::general;
    std::vector<std::vector<int32_t>> skew_vars; // pfaffian regime, -1 on the diagonal
};

namespace detail {

inline std::string subset_name(const char* stem, const std::vector<uint32_t>& s) {
    std::string n = stem;
    bool wide = false;
    for (uint32_t x : s)
        if (x > 9) wide = true;
    for (size_t i = 0; i < s.size(); ++i) {
        if (wide && i) n += '_';
        n += std::to_string(s[i]);
    }
    return n;
}

inline uint32_t sign_to_field(const Fp& F, int s) { return s >= 0 ? 1u : F.modulus() - 1; }

} // namespace detail

inline GensyzModel gensyz_model(const Fp& F, uint32_t p, uint32_t r) {
    if (p < 1 || r < p + 1) throw std::invalid_argument("model needs 1 <= p < r");
    if (r > 12) throw std::invalid_argument("model size limited to r <= 12");
    WedgeBasis a_index(r, r - p - 1), eq_index(r, r - p);
    uint32_t n_l = r;
    uint32_t nvars = n_l + uint32_t(a_index.size());
    std::vector<std::string> names;
    for (uint32_t i = 0; i < r; ++i) names.push_back("l" + std::to_string(i));
    for (size_t d = 0; d < a_index.size(); ++d)
        names.push_back(detail::subset_name("a", a_index.set(d)));
    MonBasis deg2(nvars, 2);
    Matrix eqs(eq_index.size(), deg2.size());
    for (size_t ji = 0; ji < eq_index.size(); ++ji) {
        const auto& J = eq_index.set(ji);
        for (size_t pos = 0; pos < J.size(); ++pos) {
            std::vector<uint32_t> D = J;
            D.erase(D.begin() + long(pos));
            uint32_t lvar = J[pos];
            uint32_t avar = n_l + uint32_t(a_index.index_of(D));
            std::vector<uint8_t> e(nvars, 0);
            ++e[lvar];
            ++e[avar];
            size_t m = deg2.index_of(e);
            eqs.at(ji, m) = F.add(eqs.at(ji, m), koszul_sign(F, pos));
        }
    }
    GensyzModel model{F,
                      p,
                      r,
                      n_l,
                      a_index,
                      nvars,
                      GradedIdeal(F, nvars, 2, std::move(eqs), std::move(names)),
                      eq_index,
                      GensyzRegime::general,
                      {}};
    if (r == p + 1) model.regime = GensyzRegime::reducible;
    if (r == p + 2) model.regime = GensyzRegime::scrollar;
    if (r == p + 3) {
        model.regime = GensyzRegime::pfaffian;
        uint32_t sz = p + 4;
        model.skew_vars.assign(sz, std::vector<int32_t>(sz, -1));
        for (uint32_t i = 0; i < sz; ++i)
            for (uint32_t j = i + 1; j < sz; ++j) {
                int32_t v;
                if (i == 0) {
                    v = int32_t(j - 1);
                } else {
                    std::vector<uint32_t> D{i - 1, j - 1};
                    v = int32_t(n_l + a_index.index_of(D));
                }
                model.skew_vars[i][j] = v;
                model.skew_vars[j][i] = v;
            }
    }
    return model;
}

/**
 * The tautological syzygy of the model:
 *   s_gen = sum over p-subsets A of {0..r-1} of sgn(A, A^c) e_A (x) Q_{A^c},
 * returned in ambient strand coordinates (payload over the canonical
 * reduced basis of the model's equations).
 */
inline Syzygy make_generic_syzygy(const GensyzModel& model) {
    const Fp& F = model.F;
    Echelon eqs = canonical_generators(model.equations);
    size_t q = eqs.dim();
    WedgeBasis wedge(model.nvars, model.p), lset(model.r, model.p);
    std::vector<uint32_t> coeffs(wedge.size() * q, 0);
    for (size_t ai = 0; ai < lset.size(); ++ai) {
        const auto& A = lset.set(ai);
        std::vector<uint32_t> comp;
        for (uint32_t x = 0; x < model.r; ++x)
            if (std::find(A.begin(), A.end(), x) == A.end()) comp.push_back(x);
        uint32_t eps = detail::sign_to_field(F, shuffle_sign(A, comp));
        size_t ji = model.eq_index.index_of(comp);
        auto c = coords_in(F, eqs, model.equations.gens.row_copy(ji));
        if (!c) throw std::logic_error("model equation escaped its own span");
        size_t wi = wedge.index_of(A);
        for (size_t t = 0; t < q; ++t)
            coeffs[wi * q + t] = F.add(coeffs[wi * q + t], F.mul(eps, (*c)[t]));
    }
    return Syzygy{model.p, std::move(coeffs)};
}

/// Rank of a square matrix of field values.
inline size_t value_matrix_rank(const Fp& F, const Matrix& m) {
    RowEliminator e(F, m.cols());
    for (size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
    return e.rank();
}

/**
 * Classify a point of the model's ambient space against the two-component
 * structure of the zero set (pfaffian regime only): outside the zero set,
 * on the pure linear component l = 0, on the Pfaffian cone, or on both. A
 * point with some l nonzero that satisfies the equations must give the skew
 * matrix rank exactly 2; a violation would contradict the structure theorem
 * and raises instead of misclassifying.
 */
inline PointClass classify_point(const GensyzModel& model, const std::vector<uint32_t>& point) {
    if (model.regime != GensyzRegime::pfaffian)
        throw std::invalid_argument("classification is defined for the pfaffian regime");
    if (point.size() != model.nvars) throw std::invalid_argument("point length mismatch");
    const Fp& F = model.F;
    bool all_zero = true;
    for (uint32_t x : point)
        if (x % F.modulus()) all_zero = false;
    if (all_zero) throw std::invalid_argument("zero vector is not a projective point");
    MonBasis deg2(model.nvars, 2);
    for (size_t g = 0; g < model.equations.gens.rows(); ++g)
        if (evaluate_form(F, deg2, model.equations.gens.row(g), point) != 0)
            return PointClass::outside;
    uint32_t sz = model.p + 4;
    Matrix M(sz, sz);
    for (uint32_t i = 0; i < sz; ++i)
        for (uint32_t j = 0; j < sz; ++j) {
            if (i == j) continue;
            uint32_t v = F.reduce(point[size_t(model.skew_vars[i][j])]);
            M.at(i, j) = i < j ? v : F.neg(v);
        }
    bool l_zero = true;
    for (uint32_t i = 0; i < model.r; ++i)
        if (point[i] % F.modulus()) l_zero = false;
    size_t rk = value_matrix_rank(F, M);
    if (l_zero) return rk <= 2 ? PointClass::on_both : PointClass::on_linear_part;
    if (rk != 2) throw std::logic_error("vanishing equations with l != 0 force skew rank 2");
    return PointClass::on_pfaffian_part;
}

/// Result of reconstructing a projection to a generic syzygy model.
struct LiftResult {
    GensyzModel model;
    Echelon linear_span;   // reduced echelon basis of the syzygy's linear forms
    Matrix projection;     // model.nvars rows, one linear form (over the ambient
                           // variables) per model variable
    bool pullbacks_in_ideal = false;
    bool pullback_nonzero = false;
    size_t stacked_rank = 0; // rank of the ideal basis stacked with all pullbacks
    bool reproduces_syzygy = false;
};

/**
 * Reconstruct the linear projection exhibiting a syzygy as the image of the
 * generic one: from a rank-r syzygy s in V_p, build the model for (p, r)
 * and a matrix pi expressing every model variable as a linear form in the
 * ambient variables such that pi pulls the generic syzygy back to s. The
 * l-rows of pi are the canonical basis of the linear span of s; the a-rows
 * are found by solving the commuting chain of linear systems down the
 * strand, each step having a unique solution except the last, where any
 * solution of the final system works and the canonical one is taken.
 *
 * The returned flags report the verification: every model equation pulls
 * back into the span of the input quadrics, at least one pullback is
 * nonzero, and the pullback of the generic syzygy reproduces s exactly.
 */
inline LiftResult lift_projection(const LinearStrand& st, const Syzygy& s) {
    const Fp& F = st.F;
    uint32_t n = st.nvars, p = s.p;
    if (p < 1) throw std::invalid_argument("lifting needs p >= 1");
    if (p + 1 > st.spaces.size())
        throw std::invalid_argument("strand not computed up to the syzygy's index");
    SyzygyRank rk = syzygy_rank(st, s);
    uint32_t r = uint32_t(rk.rank);
    if (r < p + 1) throw std::logic_error("syzygy rank below p+1 is impossible for nonzero s");
    const Echelon& L = rk.linear_span;
    GensyzModel model = gensyz_model(F, p, r);
    size_t q = st.q();
    MonBasis deg2(n, 2);

    // coordinates of s over the V_p basis
    auto gp = coords_in(F, st.spaces[p], s.coeffs);
    if (!gp) throw std::invalid_argument("input is not a syzygy of this strand");

    // contraction coordinate tensors between consecutive strand spaces
    std::vector<std::vector<Matrix>> D(p + 1); // D[t][i]: dim V_{t-1} x dim V_t
    for (uint32_t t = 1; t <= p; ++t) {
        WedgeBasis wsrc(n, t), wdst(n, t - 1);
        size_t mt = st.spaces[t].dim(), mprev = st.spaces[t - 1].dim();
        D[t].assign(n, Matrix(mprev, mt));
        for (size_t g = 0; g < mt; ++g) {
            std::vector<uint32_t> vec = st.spaces[t].rows.row_copy(g);
            for (uint32_t i = 0; i < n; ++i) {
                std::vector<uint32_t> c = contract(F, wsrc, wdst, q, vec, i);
                auto coords = coords_in(F, st.spaces[t - 1], c);
                if (!coords) throw std::logic_error("contraction escaped the lower strand space");
                for (size_t b = 0; b < mprev; ++b) D[t][i].at(b, g) = (*coords)[b];
            }
        }
    }

    // G chain: G[q] has one row per (p-q)-subset of the l-indices, one
    // column per V_q basis vector
    std::vector<Matrix> G(p + 1);
    G[p] = Matrix(1, st.spaces[p].dim());
    for (size_t g = 0; g < gp->size(); ++g) G[p].at(0, g) = (*gp)[g];
    {
        size_t mprev = st.spaces[p - 1].dim();
        G[p - 1] = Matrix(r, mprev);
        std::vector<uint32_t> w(n);
        for (size_t b = 0; b < mprev; ++b) {
            for (uint32_t i = 0; i < n; ++i) {
                uint64_t acc = 0;
                for (size_t g = 0; g < st.spaces[p].dim(); ++g)
                    acc += uint64_t(D[p][i].at(b, g)) * G[p].at(0, g);
                w[i] = F.reduce(acc);
            }
            auto c = coords_in(F, L, w);
            if (!c) throw std::logic_error("contraction value escaped the linear span");
            for (uint32_t t = 0; t < r; ++t) G[p - 1].at(t, b) = (*c)[t];
        }
    }
    for (int32_t qq = int32_t(p) - 2; qq >= 0; --qq) {
        uint32_t lev = uint32_t(qq);
        WedgeBasis unk(r, p - lev), eqw(r, p - lev - 1);
        size_t mq = st.spaces[lev].dim();
        size_t ncols = unk.size() * mq;
        size_t nrows = eqw.size() * mq * n;
        Matrix M(nrows, ncols), b(nrows, 1);
        size_t row = 0;
        for (size_t bi = 0; bi < eqw.size(); ++bi) {
            const auto& Bp = eqw.set(bi);
            uint32_t bmask = WedgeBasis::mask_of(Bp);
            for (size_t beta = 0; beta < mq; ++beta) {
                for (uint32_t i = 0; i < n; ++i, ++row) {
                    for (uint32_t u = 0; u < r; ++u) {
                        if (bmask & (1u << u)) continue;
                        uint32_t lui = L.rows.at(u, i);
                        if (!lui) continue;
                        size_t ai = unk.index_of_mask(bmask | (1u << u));
                        uint32_t sgn = koszul_sign(F, insert_position(Bp, u));
                        M.at(row, ai * mq + beta) =
                            F.add(M.at(row, ai * mq + beta), F.mul(sgn, lui));
                    }
                    uint64_t acc = 0;
                    for (size_t g = 0; g < st.spaces[lev + 1].dim(); ++g)
                        acc += uint64_t(G[lev + 1].at(bi, g)) * D[lev + 1][i].at(beta, g);
                    b.at(row, 0) = F.reduce(acc);
                }
            }
        }
        if (rank_kernel(F, M).rank != ncols)
            throw std::logic_error("descent system lost uniqueness");
        auto x = solve(F, M, b);
        if (!x) throw std::logic_error("descent system is inconsistent");
        G[lev] = Matrix(unk.size(), mq);
        for (size_t a = 0; a < unk.size(); ++a)
            for (size_t beta = 0; beta < mq; ++beta) G[lev].at(a, beta) = x->at(a * mq + beta, 0);
    }
    // the iterated contraction chain lands on the reversal of the wedge, so
    // the bottom row block carries a global sign of (-1)^{p(p-1)/2}
    if ((p * (p - 1) / 2) % 2)
        for (size_t a = 0; a < G[0].rows(); ++a)
            for (size_t beta = 0; beta < G[0].cols(); ++beta)
                G[0].at(a, beta) = F.neg(G[0].at(a, beta));

    // sigma: one quadric per p-subset of l-indices, and the consistency
    // check that sigma re-embeds to s through the wedge powers of L
    WedgeBasis lp(r, p), wedge_n(n, p);
    Matrix sigma(lp.size(), deg2.size());
    for (size_t bi = 0; bi < lp.size(); ++bi)
        for (size_t t = 0; t < q; ++t) {
            uint32_t c = G[0].at(bi, t);
            if (!c) continue;
            const uint32_t* qr = st.quadrics.rows.row(t);
            for (size_t m = 0; m < deg2.size(); ++m)
                sigma.at(bi, m) = F.add(sigma.at(bi, m), F.mul(c, qr[m]));
        }
    {
        std::vector<uint32_t> back(wedge_n.size() * q, 0);
        for (size_t bi = 0; bi < lp.size(); ++bi)
            for (size_t ai = 0; ai < wedge_n.size(); ++ai) {
                uint32_t det = detail::minor_det(F, L.rows, lp.set(bi), wedge_n.set(ai));
                if (!det) continue;
                for (size_t t = 0; t < q; ++t)
                    back[ai * q + t] = F.add(back[ai * q + t], F.mul(det, G[0].at(bi, t)));
            }
        if (back != s.coeffs) throw std::logic_error("descent chain does not re-embed to s");
    }

    // alpha: solve  sum_u sgn (l_u * alpha_{B u u}) = sigma_B  for one
    // linear form per (p+1)-subset; any solution works
    WedgeBasis lp1(r, p + 1);
    MonBasis deg1(n, 1);
    Matrix alpha(lp1.size(), n);
    {
        size_t ncols = lp1.size() * n;
        size_t nrows = lp.size() * deg2.size();
        Matrix M(nrows, ncols), rhs(nrows, 1);
        for (size_t bi = 0; bi < lp.size(); ++bi) {
            uint32_t bmask = WedgeBasis::mask_of(lp.set(bi));
            for (size_t mu = 0; mu < deg2.size(); ++mu) {
                size_t row = bi * deg2.size() + mu;
                rhs.at(row, 0) = sigma.at(bi, mu);
                const auto& me = deg2.exps(mu);
                for (uint32_t u = 0; u < r; ++u) {
                    if (bmask & (1u << u)) continue;
                    size_t ai = lp1.index_of_mask(bmask | (1u << u));
                    uint32_t sgn = koszul_sign(F, insert_position(lp.set(bi), u));
                    // coefficient of alpha_{ai, i}: sgn * (l_u x_i)[mu]
                    for (uint32_t i = 0; i < n; ++i) {
                        if (!me[i]) continue;
                        std::vector<uint8_t> rest = me;
                        --rest[i];
                        uint32_t j = 0;
                        while (!rest[j]) ++j;
                        uint32_t luj = L.rows.at(u, j);
                        if (!luj) continue;
                        size_t col = ai * n + i;
                        M.at(row, col) = F.add(M.at(row, col), F.mul(sgn, luj));
                    }
                }
            }
        }
        auto x = solve(F, M, rhs);
        if (!x) throw std::logic_error("projection system is inconsistent");
        for (size_t a = 0; a < lp1.size(); ++a)
            for (uint32_t i = 0; i < n; ++i) alpha.at(a, i) = x->at(a * n + i, 0);
    }

    // assemble pi: l-rows from L, a-rows as signed alpha slices
    LiftResult out{std::move(model), L, Matrix(0, 0), false, false, 0, false};
    Matrix pi(out.model.nvars, n);
    for (uint32_t t = 0; t < r; ++t)
        for (uint32_t i = 0; i < n; ++i) pi.at(t, i) = L.rows.at(t, i);
    for (size_t d = 0; d < out.model.a_index.size(); ++d) {
        const auto& Dset = out.model.a_index.set(d);
        std::vector<uint32_t> comp;
        for (uint32_t x = 0; x < r; ++x)
            if (std::find(Dset.begin(), Dset.end(), x) == Dset.end()) comp.push_back(x);
        int sgn = shuffle_sign(comp, Dset) * (p % 2 == 0 ? 1 : -1);
        uint32_t sf = detail::sign_to_field(F, sgn);
        size_t ai = lp1.index_of(comp);
        for (uint32_t i = 0; i < n; ++i)
            pi.at(out.model.n_l + d, i) = F.mul(sf, alpha.at(ai, i));
    }
    out.projection = std::move(pi);

    // verification: pull every model equation back and test membership
    MonBasis model_deg2(out.model.nvars, 2);
    auto tb = bases_up_to(n, 2);
    RowEliminator stack(F, deg2.size());
    for (size_t t = 0; t < q; ++t) stack.add_row(st.quadrics.rows.row(t));
    bool all_in = true, any_nonzero = false;
    Matrix pobs(out.model.equations.gens.rows(), deg2.size());
    for (size_t g = 0; g < out.model.equations.gens.rows(); ++g) {
        std::vector<uint32_t> pb = substitute_row(F, model_deg2, out.model.equations.gens.row(g),
                                                  out.projection, tb);
        std::copy(pb.begin(), pb.end(), pobs.row(g));
        bool nz = false;
        for (uint32_t x : pb)
            if (x) nz = true;
        any_nonzero = any_nonzero || nz;
        if (!coords_in(F, st.quadrics, pb)) all_in = false;
        stack.add_row(pb);
    }
    out.pullbacks_in_ideal = all_in;
    out.pullback_nonzero = any_nonzero;
    out.stacked_rank = stack.rank();

    if (all_in) {
        Syzygy sg = make_generic_syzygy(out.model);
        Echelon model_eqs = canonical_generators(out.model.equations);
        size_t mq = model_eqs.dim();
        // pullback coordinates of the canonical model quadrics
        Matrix P(mq, q);
        bool ok = true;
        for (size_t t = 0; t < mq && ok; ++t) {
            std::vector<uint32_t> pb =
                substitute_row(F, model_deg2, model_eqs.rows.row(t), out.projection, tb);
            auto c = coords_in(F, st.quadrics, pb);
            if (!c) {
                ok = false;
                break;
            }
            for (size_t j = 0; j < q; ++j) P.at(t, j) = (*c)[j];
        }
        if (ok) {
            WedgeBasis model_wedge(out.model.nvars, p);
            std::vector<uint32_t> pulled(wedge_n.size() * q, 0);
            for (size_t ai = 0; ai < model_wedge.size(); ++ai) {
                bool nz = false;
                for (size_t t = 0; t < mq; ++t)
                    if (sg.coeffs[ai * mq + t]) nz = true;
                if (!nz) continue;
                for (size_t wi = 0; wi < wedge_n.size(); ++wi) {
                    uint32_t det =
                        detail::minor_det(F, out.projection, model_wedge.set(ai), wedge_n.set(wi));
                    if (!det) continue;
                    for (size_t t = 0; t < mq; ++t) {
                        uint32_t c = sg.coeffs[ai * mq + t];
                        if (!c) continue;
                        uint32_t cd = F.mul(det, c);
                        for (size_t j = 0; j < q; ++j)
                            pulled[wi * q + j] =
                                F.add(pulled[wi * q + j], F.mul(cd, P.at(t, j)));
                    }
                }
            }
            out.reproduces_syzygy = (pulled == s.coeffs);
        }
    }
    return out;
}

} // namespace linsyz
