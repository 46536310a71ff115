#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace linsyz {

/**
 * Streaming Gaussian eliminator over F_p.
 *
 * Rows are fed one at a time and reduced against the pivot rows collected so
 * far; a row that survives with a nonzero entry becomes a new pivot row.
 * Pivot rows are stored as suffixes starting at their leading column, with
 * unreduced (lazy) uint32 entries: since p < 2^15, a multiply-add of reduced
 * residues adds less than p^2 per step, so a row tolerates
 * (2^32 - p) / (p-1)^2 accumulations before an explicit renormalization.
 * For the default p = 101 that is ~4*10^5 steps, i.e. renormalization never
 * triggers in practice.
 *
 * The final reduced echelon form (and hence the kernel basis) is the unique
 * canonical one: it does not depend on the order rows were fed in.
 */
class RowEliminator {
public:
    RowEliminator(const Fp& F, size_t ncols, size_t pivot_limit = SIZE_MAX)
        : F_(F), p_(F.modulus()), ncols_(ncols),
          pivot_limit_(std::min(pivot_limit, ncols)),
          pivot_of_col_(ncols, -1), scratch_(ncols, 0) {
        uint64_t step = uint64_t(p_ - 1) * (p_ - 1);
        renorm_every_ = ((uint64_t(1) << 32) - p_) / step;
        if (renorm_every_ == 0) renorm_every_ = 1;
    }

    size_t ncols() const { return ncols_; }
    size_t rank() const { return lead_col_.size(); }
    bool full_column_rank() const { return rank() == pivot_limit_; }

    /// True iff some fed row reduced to zero on the pivot-eligible columns
    /// but stayed nonzero beyond them (only possible when pivot_limit < ncols).
    bool saw_inconsistent_row() const { return inconsistent_; }

    /// Feed a dense row (length ncols, entries reduced mod p). Returns true
    /// if the row produced a new pivot.
    bool add_row(const uint32_t* vals) {
        std::copy(vals, vals + ncols_, scratch_.begin());
        return eliminate_scratch(0);
    }
    bool add_row(const std::vector<uint32_t>& vals) { return add_row(vals.data()); }

    /// Feed a sparse row given as (column, value) pairs, values reduced mod p.
    bool add_row_sparse(const std::vector<std::pair<uint32_t, uint32_t>>& entries) {
        if (entries.empty()) return false;
        std::fill(scratch_.begin(), scratch_.end(), 0);
        size_t cmin = ncols_;
        for (auto [c, v] : entries) {
            scratch_[c] = F_.add(scratch_[c], v);
            cmin = std::min(cmin, size_t(c));
        }
        return eliminate_scratch(cmin);
    }

    /**
     * Jordan-reduce the collected pivot rows to the canonical RREF.
     * Idempotent; feeding further rows afterwards is allowed (the state
     * stays a valid echelon form).
     */
    void canonicalize() {
        // Descending pivot-column order so every row we subtract is already
        // fully reduced.
        std::vector<size_t> order(lead_col_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return lead_col_[a] > lead_col_[b]; });
        for (size_t i : order) {
            auto& r = rows_[i];
            for (auto& x : r) x %= p_;
            size_t base = lead_col_[i];
            for (size_t k = 1; k < r.size(); ++k) {
                size_t col = base + k;
                int32_t pr = pivot_of_col_[col];
                if (pr < 0 || r[k] == 0) continue;
                uint32_t f = p_ - r[k];
                const auto& src = rows_[pr];
                for (size_t t = 0; t < src.size(); ++t) {
                    uint64_t acc = uint64_t(r[k + t]) + uint64_t(f) * src[t];
                    r[k + t] = uint32_t(acc % p_);
                }
            }
        }
    }

    /// Canonical RREF of the row space fed so far: rank x ncols, rows ordered
    /// by ascending pivot column. Calls canonicalize().
    Matrix rref() {
        canonicalize();
        auto order = sorted_rows();
        Matrix out(order.size(), ncols_);
        for (size_t k = 0; k < order.size(); ++k) {
            size_t i = order[k];
            const auto& r = rows_[i];
            for (size_t t = 0; t < r.size(); ++t) out.at(k, lead_col_[i] + t) = r[t];
        }
        return out;
    }

    std::vector<uint32_t> pivot_columns() const {
        std::vector<uint32_t> cols;
        for (size_t c = 0; c < ncols_; ++c)
            if (pivot_of_col_[c] >= 0) cols.push_back(uint32_t(c));
        return cols;
    }

    /**
     * Canonical basis of the right kernel {x : M x = 0} of the fed rows,
     * returned as RREF rows of a (ncols - rank) x ncols matrix.
     */
    Matrix kernel() {
        canonicalize();
        std::vector<uint32_t> piv = pivot_columns();
        size_t kdim = ncols_ - piv.size();
        RowEliminator canon(F_, ncols_);
        std::vector<uint32_t> v(ncols_);
        for (size_t f = 0; f < ncols_; ++f) {
            if (pivot_of_col_[f] >= 0) continue;
            std::fill(v.begin(), v.end(), 0);
            v[f] = 1;
            for (size_t c = 0; c < f; ++c) {
                int32_t pr = pivot_of_col_[c];
                if (pr < 0) continue;
                size_t off = f - lead_col_[pr];
                uint32_t entry = off < rows_[pr].size() ? rows_[pr][off] : 0;
                v[c] = F_.neg(entry % p_);
            }
            canon.add_row(v);
        }
        Matrix out = canon.rref();
        (void)kdim;
        return out;
    }

private:
    std::vector<size_t> sorted_rows() const {
        std::vector<size_t> order(lead_col_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return lead_col_[a] < lead_col_[b]; });
        return order;
    }

    bool eliminate_scratch(size_t cstart) {
        uint32_t* w = scratch_.data();
        uint64_t steps = 0;
        // Reduce against existing pivots in ascending column order; a pivot
        // row only touches columns at or beyond its own lead, so columns
        // already cleared stay cleared.
        for (size_t c = cstart; c < ncols_; ++c) {
            int32_t pr = pivot_of_col_[c];
            if (pr < 0) continue;
            uint32_t v = w[c] % p_;
            if (v == 0) continue;
            uint32_t f = p_ - v;
            const auto& src = rows_[pr];
            for (size_t t = 0; t < src.size(); ++t) w[c + t] += f * src[t];
            if (++steps >= renorm_every_) {
                for (size_t t = c; t < ncols_; ++t) w[t] %= p_;
                steps = 0;
            }
        }
        // Find the leading surviving entry among pivot-eligible columns.
        for (size_t c = cstart; c < pivot_limit_; ++c) {
            if (pivot_of_col_[c] >= 0) continue;
            uint32_t v = w[c] % p_;
            if (v == 0) continue;
            uint32_t s = F_.inv(v);
            std::vector<uint32_t> suffix(ncols_ - c);
            for (size_t t = c; t < ncols_; ++t)
                suffix[t - c] = uint32_t(uint64_t(w[t] % p_) * s % p_);
            pivot_of_col_[c] = int32_t(rows_.size());
            rows_.push_back(std::move(suffix));
            lead_col_.push_back(c);
            return true;
        }
        if (pivot_limit_ < ncols_) {
            for (size_t c = pivot_limit_; c < ncols_; ++c)
                if (w[c] % p_ != 0) { inconsistent_ = true; break; }
        }
        return false;
    }

    Fp F_;
    uint32_t p_;
    size_t ncols_, pivot_limit_;
    uint64_t renorm_every_;
    bool inconsistent_ = false;
    std::vector<int32_t> pivot_of_col_;
    std::vector<uint32_t> scratch_;
    std::vector<std::vector<uint32_t>> rows_; // pivot-row suffixes
    std::vector<size_t> lead_col_;            // lead column per stored row
};

/// Canonical reduced row echelon basis of a row space.
struct Echelon {
    Matrix rows;                  // RREF rows, ascending pivot columns
    std::vector<uint32_t> pivots; // pivot column of each row

    size_t dim() const { return rows.rows(); }
    size_t ambient() const { return rows.cols(); }
};

inline Echelon rref_of(const Fp& F, const Matrix& m) {
    RowEliminator e(F, m.cols());
    for (size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
    return Echelon{e.rref(), e.pivot_columns()};
}

struct RankKernel {
    size_t rank;
    Matrix kernel; // canonical RREF rows spanning {x : m x = 0}
};

/// Rank and canonical right-kernel basis of m. An empty (0-row) matrix has
/// rank 0 and full kernel (the identity RREF basis).
inline RankKernel rank_kernel(const Fp& F, const Matrix& m) {
    RowEliminator e(F, m.cols());
    for (size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
    return RankKernel{e.rank(), e.kernel()};
}

/**
 * Express v in the row space of a canonical echelon basis. Coordinates are
 * read off at the pivot columns and verified by reconstruction; returns
 * nullopt when v is not in the span.
 */
inline std::optional<std::vector<uint32_t>> coords_in(const Fp& F, const Echelon& E,
                                                      const std::vector<uint32_t>& v) {
    std::vector<uint32_t> c(E.dim());
    for (size_t i = 0; i < E.dim(); ++i) c[i] = v[E.pivots[i]] % F.modulus();
    std::vector<uint64_t> acc(v.size(), 0);
    for (size_t i = 0; i < E.dim(); ++i) {
        if (c[i] == 0) continue;
        const uint32_t* r = E.rows.row(i);
        for (size_t j = 0; j < v.size(); ++j) acc[j] += uint64_t(c[i]) * r[j];
    }
    for (size_t j = 0; j < v.size(); ++j)
        if (acc[j] % F.modulus() != v[j] % F.modulus()) return std::nullopt;
    return c;
}

/**
 * Solve m x = b for a matrix of right-hand sides; the canonical solution sets
 * all free variables to zero. Returns nullopt when any column of b is not in
 * the column space of m.
 */
inline std::optional<Matrix> solve(const Fp& F, const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    size_t n = m.cols(), k = b.cols();
    RowEliminator e(F, n + k, n);
    std::vector<uint32_t> row(n + k);
    for (size_t i = 0; i < m.rows(); ++i) {
        std::copy(m.row(i), m.row(i) + n, row.begin());
        std::copy(b.row(i), b.row(i) + k, row.begin() + n);
        e.add_row(row);
    }
    if (e.saw_inconsistent_row()) return std::nullopt;
    Matrix R = e.rref();
    std::vector<uint32_t> piv = e.pivot_columns();
    Matrix x(n, k);
    bool bad = false;
    for (size_t i = 0; i < R.rows(); ++i) {
        if (piv[i] >= n) { bad = true; break; }
        for (size_t j = 0; j < k; ++j) x.at(piv[i], j) = R.at(i, n + j);
    }
    if (bad) return std::nullopt;
    return x;
}

inline Matrix mat_mul(const Fp& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    Matrix out(a.rows(), b.cols());
    std::vector<uint64_t> acc(b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (size_t t = 0; t < a.cols(); ++t) {
            uint64_t v = a.at(i, t);
            if (!v) continue;
            const uint32_t* br = b.row(t);
            for (size_t j = 0; j < b.cols(); ++j) acc[j] += v * br[j];
            if ((t & 1023) == 1023)
                for (auto& x : acc) x %= F.modulus();
        }
        for (size_t j = 0; j < b.cols(); ++j) out.at(i, j) = uint32_t(acc[j] % F.modulus());
    }
    return out;
}

} // namespace linsyz
