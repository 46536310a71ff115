#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include <linsyz/gensyz.hpp>
#include <linsyz/prng.hpp>

using namespace linsyz;

namespace {

/// Index of the product of two distinct variables in the degree-2 basis.
size_t mono2(const MonBasis& deg2, uint32_t v1, uint32_t v2) {
    std::vector<uint8_t> e(deg2.nvars(), 0);
    ++e[v1];
    ++e[v2];
    return deg2.index_of(e);
}

} // namespace

TEST_CASE("model shapes, equation counts, and regimes") {
    Fp F(101);
    struct Row {
        uint32_t p, r;
        size_t nvars, eqs;
        GensyzRegime regime;
    };
    std::vector<Row> table = {
        {1, 2, 3, 2, GensyzRegime::reducible},   {1, 3, 6, 3, GensyzRegime::scrollar},
        {1, 4, 10, 4, GensyzRegime::pfaffian},   {2, 3, 4, 3, GensyzRegime::reducible},
        {2, 4, 8, 6, GensyzRegime::scrollar},    {2, 5, 15, 10, GensyzRegime::pfaffian},
        {1, 5, 15, 5, GensyzRegime::general},
    };
    for (const auto& row : table) {
        GensyzModel m = gensyz_model(F, row.p, row.r);
        CHECK(m.nvars == row.nvars);
        CHECK(m.equations.gens.rows() == row.eqs);
        CHECK(m.regime == row.regime);
        CHECK(canonical_generators(m.equations).dim() == row.eqs);
        CHECK(m.n_l == row.r);
    }
    CHECK(gensyz_model(F, 1, 3).equations.var_names ==
          std::vector<std::string>{"l0", "l1", "l2", "a0", "a1", "a2"});
    CHECK_THROWS_AS(gensyz_model(F, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(gensyz_model(F, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(gensyz_model(F, 1, 13), std::invalid_argument);
}

TEST_CASE("equations in the three structured regimes") {
    Fp F(101);
    uint32_t minus = F.modulus() - 1;

    SECTION("reducible: products of each linear form with the single extra variable") {
        GensyzModel m = gensyz_model(F, 2, 3);
        MonBasis deg2(m.nvars, 2);
        // a-variables: C(3, 0) = 1, named plain "a"
        REQUIRE(m.nvars == 4);
        uint32_t avar = 3 + uint32_t(m.a_index.index_of(std::vector<uint32_t>{}));
        for (size_t ji = 0; ji < m.eq_index.size(); ++ji) {
            const auto& J = m.eq_index.set(ji);
            REQUIRE(J.size() == 1);
            std::vector<uint32_t> expect(deg2.size(), 0);
            expect[mono2(deg2, J[0], avar)] = 1;
            for (size_t t = 0; t < deg2.size(); ++t) CHECK(m.equations.gens.at(ji, t) == expect[t]);
        }
    }

    SECTION("scrollar: the two-by-two minors of the variable matrix") {
        for (auto pr : {std::pair<uint32_t, uint32_t>{1, 3}, {2, 4}, {3, 5}}) {
            GensyzModel m = gensyz_model(F, pr.first, pr.second);
            REQUIRE(m.regime == GensyzRegime::scrollar);
            MonBasis deg2(m.nvars, 2);
            for (size_t ji = 0; ji < m.eq_index.size(); ++ji) {
                const auto& J = m.eq_index.set(ji);
                REQUIRE(J.size() == 2);
                uint32_t ai = m.n_l + uint32_t(m.a_index.index_of({J[0]}));
                uint32_t aj = m.n_l + uint32_t(m.a_index.index_of({J[1]}));
                std::vector<uint32_t> expect(deg2.size(), 0);
                expect[mono2(deg2, J[0], aj)] = 1;
                expect[mono2(deg2, J[1], ai)] = minus;
                for (size_t t = 0; t < deg2.size(); ++t)
                    CHECK(m.equations.gens.at(ji, t) == expect[t]);
            }
        }
    }

    SECTION("pfaffian: first-row four-by-four Pfaffians of the skew matrix") {
        for (auto pr : {std::pair<uint32_t, uint32_t>{1, 4}, {2, 5}}) {
            GensyzModel m = gensyz_model(F, pr.first, pr.second);
            REQUIRE(m.regime == GensyzRegime::pfaffian);
            uint32_t sz = pr.first + 4;
            REQUIRE(m.skew_vars.size() == sz);
            MonBasis deg2(m.nvars, 2);
            for (size_t ji = 0; ji < m.eq_index.size(); ++ji) {
                const auto& J = m.eq_index.set(ji);
                REQUIRE(J.size() == 3);
                // principal submatrix rows {0, J+1}; its Pfaffian is
                // M01 M23 - M02 M13 + M03 M12
                uint32_t rows[4] = {0, J[0] + 1, J[1] + 1, J[2] + 1};
                auto entry = [&](int a, int b) {
                    return uint32_t(m.skew_vars[rows[a]][rows[b]]);
                };
                std::vector<uint32_t> expect(deg2.size(), 0);
                expect[mono2(deg2, entry(0, 1), entry(2, 3))] = 1;
                size_t mid = mono2(deg2, entry(0, 2), entry(1, 3));
                expect[mid] = F.add(expect[mid], minus);
                size_t last = mono2(deg2, entry(0, 3), entry(1, 2));
                expect[last] = F.add(expect[last], 1);
                for (size_t t = 0; t < deg2.size(); ++t)
                    CHECK(m.equations.gens.at(ji, t) == expect[t]);
            }
        }
    }
}

TEST_CASE("the tautological syzygy lives in the strand with full structure") {
    Fp F(101);
    for (auto pr : {std::pair<uint32_t, uint32_t>{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}}) {
        GensyzModel m = gensyz_model(F, pr.first, pr.second);
        LinearStrand st = linear_strand(m.equations, pr.first);
        Syzygy s = make_generic_syzygy(m);
        CHECK(strand_coords(st, s).has_value());

        SyzygyRank rk = syzygy_rank(st, s);
        CHECK(rk.rank == pr.second);
        // the linear span is exactly the coordinate span of the l variables
        REQUIRE(rk.linear_span.dim() == pr.second);
        for (uint32_t t = 0; t < pr.second; ++t)
            for (uint32_t i = 0; i < m.nvars; ++i)
                CHECK(rk.linear_span.rows.at(t, i) == (i == t ? 1u : 0u));

        // the scheme cut out by the syzygy is the whole set of model equations
        GradedIdeal sch = syzygy_scheme(st, s);
        Echelon a = canonical_generators(sch), b = canonical_generators(m.equations);
        CHECK(a.rows == b.rows);
    }
}

TEST_CASE("point classification against the two components") {
    Fp F(101);
    Rng rng(47);
    for (auto pr : {std::pair<uint32_t, uint32_t>{1, 4}, {2, 5}}) {
        GensyzModel m = gensyz_model(F, pr.first, pr.second);
        uint32_t sz = pr.first + 4;
        MonBasis deg2(m.nvars, 2);
        int outside = 0, linear = 0, pfaff = 0, both = 0;

        auto from_skew = [&](const Matrix& M) {
            std::vector<uint32_t> pt(m.nvars, 0);
            for (uint32_t i = 0; i < sz; ++i)
                for (uint32_t j = i + 1; j < sz; ++j) pt[size_t(m.skew_vars[i][j])] = M.at(i, j);
            return pt;
        };
        auto rank2_skew = [&](bool kill_first) {
            std::vector<uint32_t> x(sz), y(sz);
            for (uint32_t i = 0; i < sz; ++i) {
                x[i] = rng.field_elem(F.modulus());
                y[i] = rng.field_elem(F.modulus());
            }
            if (kill_first) x[0] = y[0] = 0;
            Matrix M(sz, sz);
            for (uint32_t i = 0; i < sz; ++i)
                for (uint32_t j = 0; j < sz; ++j)
                    M.at(i, j) = F.sub(F.mul(x[i], y[j]), F.mul(x[j], y[i]));
            return M;
        };

        for (int trial = 0; trial < 60; ++trial) {
            // random points are overwhelmingly off the zero set
            std::vector<uint32_t> pt(m.nvars);
            for (auto& c : pt) c = rng.field_elem(F.modulus());
            pt[0] = 1;
            PointClass c = classify_point(m, pt);
            if (c == PointClass::outside) ++outside;

            // rank-two skew values with a nonzero first row solve every
            // equation and have visible linear forms
            Matrix M = rank2_skew(false);
            bool first_row = false;
            for (uint32_t j = 1; j < sz; ++j)
                if (M.at(0, j)) first_row = true;
            if (first_row) {
                CHECK(classify_point(m, from_skew(M)) == PointClass::on_pfaffian_part);
                ++pfaff;
            }

            // vanishing linear part, generic lower block
            std::vector<uint32_t> lin(m.nvars, 0);
            for (size_t d = 0; d < m.a_index.size(); ++d)
                lin[m.n_l + d] = rng.field_elem(F.modulus());
            bool nz = false;
            for (uint32_t v : lin)
                if (v) nz = true;
            if (nz) {
                PointClass c2 = classify_point(m, lin);
                if (c2 == PointClass::on_linear_part)
                    ++linear;
                else
                    CHECK(c2 == PointClass::on_both);
            }

            // rank-two matrix supported away from the first row and column
            Matrix Z = rank2_skew(true);
            bool haszero = false;
            for (uint32_t i = 0; i < sz && !haszero; ++i)
                for (uint32_t j = i + 1; j < sz; ++j)
                    if (Z.at(i, j)) haszero = true;
            if (haszero) {
                CHECK(classify_point(m, from_skew(Z)) == PointClass::on_both);
                ++both;
            }
        }
        CHECK(outside > 40);
        CHECK(linear > 40);
        CHECK(pfaff > 40);
        CHECK(both > 40);
    }
    GensyzModel scroll = gensyz_model(F, 1, 3);
    CHECK_THROWS_AS(classify_point(scroll, std::vector<uint32_t>(6, 1)), std::invalid_argument);
    GensyzModel m14 = gensyz_model(F, 1, 4);
    CHECK_THROWS_AS(classify_point(m14, std::vector<uint32_t>(10, 0)), std::invalid_argument);
}

TEST_CASE("round trip: the generic syzygy lifts to the identity projection") {
    Fp F(101);
    for (auto pr : {std::pair<uint32_t, uint32_t>{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}}) {
        GensyzModel m = gensyz_model(F, pr.first, pr.second);
        LinearStrand st = linear_strand(m.equations, pr.first);
        Syzygy s = make_generic_syzygy(m);
        LiftResult lift = lift_projection(st, s);
        CHECK(lift.model.p == pr.first);
        CHECK(lift.model.r == pr.second);
        CHECK(lift.pullbacks_in_ideal);
        CHECK(lift.pullback_nonzero);
        CHECK(lift.stacked_rank == st.q());
        CHECK(lift.reproduces_syzygy);
    }
}

TEST_CASE("organic strands lift onto their structured models") {
    Fp F(101);

    SECTION("two coordinate planes give the reducible model") {
        MonBasis deg2(4, 2);
        Matrix gens(2, deg2.size());
        auto put = [&](size_t row, uint32_t v1, uint32_t v2) {
            gens.at(row, mono2(deg2, v1, v2)) = 1;
        };
        put(0, 0, 1);
        put(1, 0, 2);
        GradedIdeal I(F, 4, 2, std::move(gens));
        LinearStrand st = linear_strand(I, 1);
        REQUIRE(st.spaces[1].dim() == 1);
        Syzygy s{1, st.spaces[1].rows.row_copy(0)};
        LiftResult lift = lift_projection(st, s);
        CHECK(lift.model.regime == GensyzRegime::reducible);
        CHECK(lift.model.r == 2);
        CHECK(lift.pullbacks_in_ideal);
        CHECK(lift.pullback_nonzero);
        CHECK(lift.stacked_rank == 2);
        CHECK(lift.reproduces_syzygy);
    }

    SECTION("a rank-three syzygy of the twisted cubic gives the scrollar model") {
        MonBasis deg2(4, 2);
        Matrix gens(3, deg2.size());
        uint32_t minus = F.modulus() - 1;
        auto put = [&](size_t row, uint32_t v1, uint32_t v2, uint32_t c) {
            gens.at(row, mono2(deg2, v1, v2)) = c;
        };
        std::vector<uint8_t> sq(4, 0);
        put(0, 0, 2, 1);
        sq.assign(4, 0);
        sq[1] = 2;
        gens.at(0, deg2.index_of(sq)) = minus;
        put(1, 0, 3, 1);
        put(1, 1, 2, minus);
        put(2, 1, 3, 1);
        sq.assign(4, 0);
        sq[2] = 2;
        gens.at(2, deg2.index_of(sq)) = minus;
        GradedIdeal I(F, 4, 2, std::move(gens));
        LinearStrand st = linear_strand(I, 1);
        REQUIRE(st.spaces[1].dim() == 2);
        Rng rng(3);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<uint32_t> coeffs(st.spaces[1].ambient(), 0);
            uint32_t c0 = rng.field_elem(F.modulus()), c1 = rng.field_elem(F.modulus());
            if (!c0 && !c1) c0 = 1;
            for (size_t t = 0; t < coeffs.size(); ++t)
                coeffs[t] =
                    F.add(F.mul(c0, st.spaces[1].rows.at(0, t)), F.mul(c1, st.spaces[1].rows.at(1, t)));
            Syzygy s{1, coeffs};
            SyzygyRank rk = syzygy_rank(st, s);
            if (rk.rank != 3) continue; // degenerate members of the pencil
            LiftResult lift = lift_projection(st, s);
            CHECK(lift.model.regime == GensyzRegime::scrollar);
            CHECK(lift.pullbacks_in_ideal);
            CHECK(lift.stacked_rank == 3);
            CHECK(lift.reproduces_syzygy);
        }
    }
}
