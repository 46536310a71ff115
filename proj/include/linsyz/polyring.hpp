#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "exactint.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "matrix.hpp"

namespace linsyz {

/// dim S_d for the polynomial ring in nvars variables: C(d + nvars - 1, d).
inline size_t graded_dim(size_t nvars, size_t d) {
    return size_t(binomial(int64_t(d + nvars - 1), int64_t(d)).to_int64());
}

/**
 * Canonical basis of the degree-d piece of F[x_0..x_{n-1}].
 *
 * Monomials are listed in graded-lex order with x_0 > x_1 > ... > x_{n-1}:
 * index 0 is x_0^d, the last index is x_{n-1}^d. For the reverse lookup the
 * exponent vector is packed into a 64-bit key at the smallest width that
 * holds the degree, so low degrees admit many variables (32 at degree 3)
 * and high degrees few (16 at degree 15).
 */
class MonBasis {
public:
    MonBasis(uint32_t nvars, uint32_t degree) : nvars_(nvars), degree_(degree) {
        width_ = 1;
        while ((1u << width_) <= degree) ++width_;
        if (degree > 15 || uint64_t(nvars) * width_ > 64)
            throw std::invalid_argument("monomial basis too large to key");
        std::vector<uint8_t> exps(nvars, 0);
        emit(exps, 0, degree);
    }

    uint32_t nvars() const { return nvars_; }
    uint32_t degree() const { return degree_; }
    size_t size() const { return mons_.size(); }
    const std::vector<uint8_t>& exps(size_t idx) const { return mons_[idx]; }

    uint64_t pack(const std::vector<uint8_t>& e) const {
        uint64_t k = 0;
        for (size_t i = 0; i < e.size(); ++i) k |= uint64_t(e[i]) << (width_ * i);
        return k;
    }

    size_t index_of(const std::vector<uint8_t>& e) const {
        auto it = lookup_.find(pack(e));
        if (it == lookup_.end()) throw std::logic_error("monomial outside basis");
        return it->second;
    }

    /// Index of the product of a basis monomial with x_j (in the degree+1 basis).
    static std::vector<uint8_t> times_var(const std::vector<uint8_t>& e, uint32_t j) {
        std::vector<uint8_t> r = e;
        ++r[j];
        return r;
    }

private:
    void emit(std::vector<uint8_t>& exps, uint32_t var, uint32_t rem) {
        if (var + 1 == nvars_) {
            exps[var] = uint8_t(rem);
            lookup_[pack(exps)] = mons_.size();
            mons_.push_back(exps);
            exps[var] = 0;
            return;
        }
        for (int32_t e = int32_t(rem); e >= 0; --e) {
            exps[var] = uint8_t(e);
            emit(exps, var + 1, rem - uint32_t(e));
        }
        exps[var] = 0;
    }

    uint32_t nvars_, degree_, width_ = 1;
    std::vector<std::vector<uint8_t>> mons_;
    std::unordered_map<uint64_t, size_t> lookup_;
};

/// Homogeneous ideal presented by generators of one common degree, stored as
/// dense coefficient rows over the MonBasis of that degree.
struct GradedIdeal {
    Fp F;
    uint32_t nvars = 0;
    uint32_t gen_degree = 2;
    Matrix gens; // one row per generator
    std::vector<std::string> var_names;

    GradedIdeal(const Fp& field, uint32_t n, uint32_t deg, Matrix g,
                std::vector<std::string> names = {})
        : F(field), nvars(n), gen_degree(deg), gens(std::move(g)), var_names(std::move(names)) {
        if (gens.rows() > 0 && gens.cols() != graded_dim(nvars, gen_degree))
            throw std::invalid_argument("generator row length does not match the graded basis");
        if (var_names.empty()) {
            var_names.reserve(nvars);
            for (uint32_t i = 0; i < nvars; ++i) var_names.push_back("x" + std::to_string(i));
        }
        if (var_names.size() != nvars)
            throw std::invalid_argument("variable name count mismatch");
    }
};

/// Canonical reduced echelon basis of the span of the generators.
inline Echelon canonical_generators(const GradedIdeal& I) {
    return rref_of(I.F, I.gens);
}

/**
 * Canonical basis of the degree-d piece I_d = span{ m * g }, m running over
 * all monomials of degree d - gen_degree.
 */
inline Echelon ideal_degree_piece(const GradedIdeal& I, uint32_t d) {
    size_t target_dim = graded_dim(I.nvars, d);
    if (d < I.gen_degree || I.gens.rows() == 0) {
        RowEliminator e(I.F, target_dim);
        return Echelon{e.rref(), {}};
    }
    if (d == I.gen_degree) return canonical_generators(I);
    MonBasis low(I.nvars, d - I.gen_degree), src(I.nvars, I.gen_degree), dst(I.nvars, d);
    RowEliminator e(I.F, target_dim);
    std::vector<std::pair<uint32_t, uint32_t>> row;
    for (size_t m = 0; m < low.size(); ++m) {
        const auto& me = low.exps(m);
        for (size_t g = 0; g < I.gens.rows(); ++g) {
            row.clear();
            const uint32_t* gr = I.gens.row(g);
            for (size_t t = 0; t < src.size(); ++t) {
                if (!gr[t]) continue;
                std::vector<uint8_t> prod = src.exps(t);
                for (uint32_t v = 0; v < I.nvars; ++v) prod[v] = uint8_t(prod[v] + me[v]);
                row.emplace_back(uint32_t(dst.index_of(prod)), gr[t]);
            }
            e.add_row_sparse(row);
        }
    }
    return Echelon{e.rref(), e.pivot_columns()};
}

/**
 * Substitute each variable x_i by the linear form sum_j A[i][j] y_j in a
 * homogeneous polynomial of the given degree, expanding over the degree-d
 * basis in A.cols() new variables. No rank assumption on A.
 */
inline std::vector<uint32_t> substitute_form(const Fp& F, const std::vector<uint8_t>& exps,
                                             uint32_t coeff, const Matrix& A,
                                             const std::vector<MonBasis>& target_bases) {
    // target_bases[t] must be MonBasis(A.cols(), t) for t = 0..degree.
    size_t m = A.cols();
    std::vector<uint32_t> cur{coeff % F.modulus()};
    uint32_t deg = 0;
    for (uint32_t v = 0; v < exps.size(); ++v) {
        for (uint8_t rep = 0; rep < exps[v]; ++rep) {
            const MonBasis& from = target_bases[deg];
            const MonBasis& to = target_bases[deg + 1];
            std::vector<uint32_t> next(to.size(), 0);
            for (size_t t = 0; t < from.size(); ++t) {
                if (!cur[t]) continue;
                for (size_t j = 0; j < m; ++j) {
                    uint32_t a = A.at(v, j);
                    if (!a) continue;
                    size_t idx = to.index_of(MonBasis::times_var(from.exps(t), uint32_t(j)));
                    next[idx] = uint32_t((next[idx] + uint64_t(cur[t]) * a) % F.modulus());
                }
            }
            cur = std::move(next);
            ++deg;
        }
    }
    return cur;
}

/// Substitute throughout one coefficient row of degree `deg` polynomials.
inline std::vector<uint32_t> substitute_row(const Fp& F, const MonBasis& src,
                                            const uint32_t* row, const Matrix& A,
                                            const std::vector<MonBasis>& target_bases) {
    std::vector<uint32_t> out(target_bases[src.degree()].size(), 0);
    for (size_t t = 0; t < src.size(); ++t) {
        if (!row[t]) continue;
        std::vector<uint32_t> term = substitute_form(F, src.exps(t), row[t], A, target_bases);
        for (size_t j = 0; j < out.size(); ++j) out[j] = F.add(out[j], term[j]);
    }
    return out;
}

inline std::vector<MonBasis> bases_up_to(uint32_t nvars, uint32_t degree) {
    std::vector<MonBasis> b;
    b.reserve(degree + 1);
    for (uint32_t d = 0; d <= degree; ++d) b.emplace_back(nvars, d);
    return b;
}

/**
 * Restrict an ideal to a linear subspace P^{m-1} of P^{nvars-1}. The
 * substitution matrix has nvars rows and m < nvars columns and expresses the
 * old variables as linear forms in the new ones; it must have full column
 * rank (a rank-deficient parametrization is rejected). Generators are
 * substituted and returned un-canonicalized (their span may be smaller than
 * the original generator count; callers decide what dimension they expect).
 */
inline GradedIdeal restrict_to_subspace(const GradedIdeal& I, const Matrix& A,
                                        std::vector<std::string> new_names = {}) {
    if (A.rows() != I.nvars || A.cols() >= I.nvars || A.cols() == 0)
        throw std::invalid_argument("substitution must map fewer new variables into the old ones");
    {
        RowEliminator e(I.F, A.rows());
        Matrix At = A.transposed();
        for (size_t i = 0; i < At.rows(); ++i) e.add_row(At.row(i));
        if (e.rank() != A.cols())
            throw std::invalid_argument("substitution matrix is rank-deficient");
    }
    MonBasis src(I.nvars, I.gen_degree);
    auto tb = bases_up_to(uint32_t(A.cols()), I.gen_degree);
    Matrix out(I.gens.rows(), tb[I.gen_degree].size());
    for (size_t g = 0; g < I.gens.rows(); ++g) {
        std::vector<uint32_t> r = substitute_row(I.F, src, I.gens.row(g), A, tb);
        std::copy(r.begin(), r.end(), out.row(g));
    }
    return GradedIdeal(I.F, uint32_t(A.cols()), I.gen_degree, std::move(out),
                       std::move(new_names));
}

struct HilbertProbe {
    std::vector<int64_t> values;            // dim (S/I)_d for d = 0..d_max
    std::optional<uint32_t> stabilized_at;  // first d with values[d] == values[d+1]
    std::optional<int64_t> stable_value;
    std::optional<uint32_t> empty_from;     // first d with (S/I)_d = 0; the ideal
                                            // then fills every later degree too
};

/**
 * Quotient Hilbert function probe: dim (S/I)_d for d = 0..d_max, with the
 * first stabilization witness (two consecutive equal values) and, when the
 * quotient hits 0, the degree from which the ideal provably fills the whole
 * ring (I_d = S_d forces I_e = S_e for all e >= d).
 */
inline HilbertProbe hilbert_probe(const GradedIdeal& I, uint32_t d_max) {
    HilbertProbe out;
    for (uint32_t d = 0; d <= d_max; ++d) {
        int64_t total = int64_t(graded_dim(I.nvars, d));
        int64_t hd;
        if (d < I.gen_degree) {
            hd = total;
        } else {
            Echelon piece = ideal_degree_piece(I, d);
            hd = total - int64_t(piece.dim());
        }
        out.values.push_back(hd);
        if (!out.empty_from && hd == 0 && d >= I.gen_degree) out.empty_from = d;
        if (!out.stabilized_at && d > 0 && out.values[d - 1] == hd && d > I.gen_degree) {
            out.stabilized_at = d - 1;
            out.stable_value = hd;
        }
    }
    return out;
}

/// Evaluate a coefficient row at a point (all coordinates reduced mod p).
inline uint32_t evaluate_form(const Fp& F, const MonBasis& basis, const uint32_t* row,
                              const std::vector<uint32_t>& point) {
    uint64_t acc = 0;
    for (size_t t = 0; t < basis.size(); ++t) {
        if (!row[t]) continue;
        uint64_t term = row[t];
        const auto& e = basis.exps(t);
        for (size_t v = 0; v < e.size(); ++v)
            for (uint8_t rep = 0; rep < e[v]; ++rep) term = term * point[v] % F.modulus();
        acc += term;
    }
    return uint32_t(acc % F.modulus());
}

} // namespace linsyz
