#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <linsyz/grass.hpp>
#include <linsyz/io.hpp>
#include <linsyz/prng.hpp>

using namespace linsyz;

namespace {

GradedIdeal twisted_cubic(const Fp& F) {
    MonBasis deg2(4, 2);
    Matrix gens(3, deg2.size());
    uint32_t minus = F.modulus() - 1;
    auto cross = [&](uint32_t v1, uint32_t v2) {
        std::vector<uint8_t> e(4, 0);
        ++e[v1];
        ++e[v2];
        return deg2.index_of(e);
    };
    auto square = [&](uint32_t v) {
        std::vector<uint8_t> e(4, 0);
        e[v] = 2;
        return deg2.index_of(e);
    };
    gens.at(0, cross(0, 2)) = 1;
    gens.at(0, square(1)) = minus;
    gens.at(1, cross(0, 3)) = 1;
    gens.at(1, cross(1, 2)) = minus;
    gens.at(2, cross(1, 3)) = 1;
    gens.at(2, square(2)) = minus;
    return GradedIdeal(F, 4, 2, std::move(gens));
}

} // namespace

TEST_CASE("hash primitive matches the published test vectors") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("structured serialization round trips exactly") {
    Fp F(101);
    GradedIdeal I = twisted_cubic(F);
    json j = ideal_to_json(I);
    GradedIdeal back = ideal_from_json(j);
    CHECK(back.F.modulus() == 101);
    CHECK(back.nvars == 4);
    CHECK(back.var_names == I.var_names);
    CHECK(back.gens == I.gens);

    // degree and shape validation
    json bad = j;
    bad["quadrics"][0][0]["exps"] = std::vector<int>{1, 1, 1, 0};
    CHECK_THROWS_AS(ideal_from_json(bad), std::invalid_argument);
    bad = j;
    bad["quadrics"][0][0]["exps"] = std::vector<int>{1, 1};
    CHECK_THROWS_AS(ideal_from_json(bad), std::invalid_argument);
}

TEST_CASE("ideal fingerprint is presentation independent") {
    Fp F(101);
    GradedIdeal I = twisted_cubic(F);
    std::string h = ideal_hash(I);

    // mix the generators by an invertible transformation
    Matrix mixed(3, I.gens.cols());
    for (size_t t = 0; t < I.gens.cols(); ++t) {
        mixed.at(0, t) = F.add(F.mul(2, I.gens.at(0, t)), I.gens.at(1, t));
        mixed.at(1, t) = F.add(I.gens.at(1, t), F.mul(7, I.gens.at(2, t)));
        mixed.at(2, t) = F.mul(3, I.gens.at(2, t));
    }
    GradedIdeal J(F, 4, 2, std::move(mixed));
    CHECK(ideal_hash(J) == h);

    GradedIdeal other = pluecker_ideal(F, 4);
    CHECK(ideal_hash(other) != h);
}

TEST_CASE("syzygy files remember their parent ideal") {
    Fp F(101);
    GradedIdeal I = twisted_cubic(F);
    LinearStrand st = linear_strand(I, 1);
    REQUIRE(st.spaces[1].dim() == 2);
    Syzygy s{1, st.spaces[1].rows.row_copy(0)};
    json j = syzygy_to_json(s, I);
    Syzygy back = syzygy_from_json(j, I);
    CHECK(back.p == 1);
    CHECK(back.coeffs == s.coeffs);
    GradedIdeal other = pluecker_ideal(F, 4);
    CHECK_THROWS_AS(syzygy_from_json(j, other), std::invalid_argument);
}

TEST_CASE("text rendering round trips with headers") {
    Fp F(101);
    GradedIdeal I = twisted_cubic(F);
    std::string text = ideal_to_text(I);
    CHECK(text.find("# p: 101") != std::string::npos);
    CHECK(text.find("# vars: x0 x1 x2 x3") != std::string::npos);
    CHECK(text.find("x0*x2 - x1^2") != std::string::npos);
    GradedIdeal back = ideal_from_text(text);
    CHECK(back.F.modulus() == I.F.modulus());
    CHECK(back.var_names == I.var_names);
    CHECK(back.gens == I.gens);

    // a zero row prints as "0" and survives the trip
    Matrix z(1, MonBasis(4, 2).size());
    GradedIdeal Z(F, 4, 2, std::move(z));
    GradedIdeal zback = ideal_from_text(ideal_to_text(Z));
    CHECK(zback.gens == Z.gens);

    // named variables with a small modulus
    GradedIdeal named = ideal_from_text("# p: 7\n# vars: a b c\na*b + 6*c^2\n");
    CHECK(named.F.modulus() == 7);
    CHECK(named.var_names == std::vector<std::string>{"a", "b", "c"});
    MonBasis deg2(3, 2);
    std::vector<uint8_t> ab{1, 1, 0}, cc{0, 0, 2};
    CHECK(named.gens.at(0, deg2.index_of(ab)) == 1);
    CHECK(named.gens.at(0, deg2.index_of(cc)) == 6);
}

TEST_CASE("parser accepts the documented grammar and rejects junk") {
    GradedIdeal I = ideal_from_text("3*x0*x1 - x2^2\n", 101);
    CHECK(I.nvars == 3);
    MonBasis deg2(3, 2);
    std::vector<uint8_t> x01{1, 1, 0}, x22{0, 0, 2};
    CHECK(I.gens.at(0, deg2.index_of(x01)) == 3);
    CHECK(I.gens.at(0, deg2.index_of(x22)) == 100);

    GradedIdeal lead = ideal_from_text("-x0*x1 + 2 * x1 ^ 2\n", 101);
    REQUIRE(lead.nvars == 2);
    MonBasis two(2, 2);
    CHECK(lead.gens.at(0, two.index_of(std::vector<uint8_t>{1, 1})) == 100);
    CHECK(lead.gens.at(0, two.index_of(std::vector<uint8_t>{0, 2})) == 2);

    // repeated variables multiply out
    GradedIdeal sq = ideal_from_text("x0*x0\n", 101);
    MonBasis d1(1, 2);
    CHECK(sq.gens.at(0, d1.index_of(std::vector<uint8_t>{2})) == 1);

    CHECK_THROWS_AS(ideal_from_text("x0*x1*x2\n", 101), std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_text("x0\n", 101), std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_text("x0*y1\n", 101), std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_text("x0*x1 x2^2\n", 101), std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_text("\n# p: 101\n", 101), std::invalid_argument);
}

TEST_CASE("files load by content sniffing") {
    Fp F(101);
    GradedIdeal I = twisted_cubic(F);
    std::string jpath = "/tmp/linsyz_io_test.json";
    std::string tpath = "/tmp/linsyz_io_test.txt";
    write_file(jpath, ideal_to_json(I).dump(2));
    write_file(tpath, ideal_to_text(I));
    GradedIdeal a = load_ideal(jpath, 101);
    GradedIdeal b = load_ideal(tpath, 101);
    CHECK(a.gens == I.gens);
    CHECK(b.gens == I.gens);
    CHECK(ideal_hash(a) == ideal_hash(b));
    CHECK_THROWS_AS(load_ideal("/tmp/linsyz_does_not_exist.json", 101), std::system_error);
    std::remove(jpath.c_str());
    std::remove(tpath.c_str());
}
