#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exactint.hpp"
#include "field.hpp"
#include "grass.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "polyring.hpp"
#include "prng.hpp"
#include "rep.hpp"
#include "syzygy.hpp"

namespace linsyz {

/// Hilbert function of the Pluecker-embedded Grassmannian of 2-planes in
/// n-space: the dimension of the irreducible with rectangular highest
/// weight (d, d).
inline Int128 grass_hilbert(uint32_t n, uint32_t d) {
    if (d == 0) return Int128(1);
    return schur_dim({int64_t(d), int64_t(d)}, n);
}

/**
 * Hilbert function of a general linear section of that Grassmannian of the
 * given codimension, optionally intersected with one further general
 * quadric, valid in the low degrees probed here: iterated differences
 *   h(d) = sum_i (-1)^i C(codim, i) h_G(d - i),
 * then h(d) -> h(d) - h(d-2) for the extra quadric.
 */
inline int64_t section_hilbert(uint32_t n, uint32_t codim, bool extra_quadric, uint32_t d) {
    auto base = [&](int64_t dd) -> Int128 {
        if (dd < 0) return Int128(0);
        Int128 acc(0);
        for (uint32_t i = 0; i <= codim; ++i) {
            if (int64_t(dd) - int64_t(i) < 0) break;
            Int128 term = binomial(codim, i) * grass_hilbert(n, uint32_t(dd - int64_t(i)));
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    Int128 h = base(d);
    if (extra_quadric) h = h - base(int64_t(d) - 2);
    return h.to_int64();
}

enum class SectionKind { curve, k3 };

/**
 * A Mukai-type section of the Grassmannian of 2-planes in (k+2)-space,
 * k = 3 or 4: a general linear slice of the Pluecker quadrics down to
 *   P^{2k-1} (curve of genus 2k) or P^{2k} (K3 surface),
 * plus one general extra quadric when k = 3 (where the Grassmannian has
 * codimension too small to cut the section by linear forms alone).
 *
 * Every draw is validated against the exact expected quadric count and
 * cubic dimension of a general section; failures redraw, and exhausting
 * the attempt budget throws DegenerateSection (a larger field helps).
 */
struct MukaiSection {
    uint32_t k = 0;
    SectionKind kind = SectionKind::curve;
    uint32_t n = 0;           // k + 2
    uint32_t ambient_vars = 0; // C(n,2)
    uint32_t m = 0;           // variables of the section
    Matrix substitution;      // ambient_vars x m, full column rank
    GradedIdeal ideal;        // quadrics of the section
    uint32_t attempts = 0;
    size_t expected_quadrics = 0;
    int64_t expected_cubics = 0;
};

inline MukaiSection mukai_section(const Fp& F, uint32_t k, SectionKind kind, uint64_t seed,
                                  uint32_t max_attempts = 32) {
    if (k != 3 && k != 4) throw std::invalid_argument("supported genera are k = 3 and k = 4");
    uint32_t n = k + 2;
    uint32_t N = uint32_t(WedgeBasis(n, 2).size());
    uint32_t m = (kind == SectionKind::curve) ? 2 * k : 2 * k + 1;
    bool extra = (k == 3);
    uint32_t codim = N - m;
    GradedIdeal G = pluecker_ideal(F, n);
    MonBasis deg2(m, 2), deg3_basis(m, 3);
    size_t s2 = deg2.size(), s3 = deg3_basis.size();
    size_t want_quadrics = s2 - size_t(section_hilbert(n, codim, extra, 2));
    int64_t want_cubics = int64_t(s3) - section_hilbert(n, codim, extra, 3);
    Rng rng(seed);
    for (uint32_t attempt = 1; attempt <= max_attempts; ++attempt) {
        Matrix A(N, m);
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < m; ++j) A.at(i, j) = rng.field_elem(F.modulus());
        {
            RowEliminator e(F, m);
            Matrix At = A.transposed();
            for (size_t i = 0; i < At.rows(); ++i) e.add_row(At.row(i));
            if (e.rank() != m) continue;
        }
        GradedIdeal sect = restrict_to_subspace(G, A);
        Matrix gens = sect.gens;
        if (extra) {
            std::vector<uint32_t> qrow(s2);
            for (size_t t = 0; t < s2; ++t) qrow[t] = rng.field_elem(F.modulus());
            gens.append_row(qrow);
        }
        GradedIdeal full(F, m, 2, std::move(gens));
        Echelon quads = canonical_generators(full);
        if (quads.dim() != want_quadrics) continue;
        Echelon cubics = ideal_degree_piece(full, 3);
        if (int64_t(cubics.dim()) != want_cubics) continue;
        return MukaiSection{k,       kind,          n,
                            N,       m,             std::move(A),
                            std::move(full), attempt, want_quadrics,
                            want_cubics};
    }
    throw DegenerateSection("no valid section of the 2-plane Grassmannian in " +
                            std::to_string(n) + "-space after " + std::to_string(max_attempts) +
                            " attempts over F_" + std::to_string(F.modulus()) +
                            "; a larger prime is likely needed");
}

/// Homological depth to which the strand of a section is reported: down to
/// the terminal zero for curves, one less for K3 surfaces.
inline uint32_t section_strand_depth(uint32_t k, SectionKind kind) {
    return (kind == SectionKind::curve) ? k - 1 : k - 2;
}

struct DualDegreeProbe {
    uint32_t dual_vars = 0;  // N - m
    HilbertProbe probe;
};

/**
 * Degree probe of the orthogonal dual section: the linear forms vanishing
 * on the section's span cut a linear subspace of the dual Pluecker space,
 * which meets the dual Grassmannian (the same Pfaffian quadrics in dual
 * coordinates) in a finite scheme for curve sections (Hilbert values
 * stabilize at its degree) and in nothing at all for K3 sections (the
 * probe certifies emptiness).
 */
inline DualDegreeProbe dual_orthogonal_degree(const Fp& F, const MukaiSection& sect,
                                              uint32_t d_max) {
    const Matrix& A = sect.substitution;
    RankKernel lk = rank_kernel(F, A.transposed());
    if (lk.rank != sect.m) throw std::logic_error("section substitution lost rank");
    Matrix dual_sub = lk.kernel.transposed(); // N x (N - m)
    GradedIdeal G = pluecker_ideal(F, sect.n);
    GradedIdeal dual_sect = restrict_to_subspace(G, dual_sub);
    DualDegreeProbe out;
    out.dual_vars = uint32_t(dual_sub.cols());
    out.probe = hilbert_probe(dual_sect, d_max);
    return out;
}

} // namespace linsyz
