#include "test_main.hpp"

#include "polaris/chevalley.hpp"
#include "polaris/io.hpp"

using namespace polaris;

TEST_CASE("matrix files round trip") {
    for (int q : {2, 4, 9}) {
        Field F = field_of_order(q);
        ClassicalForm form = make_symplectic(F, 2);
        std::vector<int> r{1, -1};
        SemilinearMap g = chevalley_generator(F, Family::C, 2, r, static_cast<Elem>(q - 1));
        g.frob = F.k - 1;
        MatrixFile back = matrix_from_json(json::parse(matrix_json(form, g).dump()));
        CHECK(back.g.M == g.M);
        CHECK(back.g.frob == g.frob);
        CHECK(back.form.kind == FormKind::Symplectic);
        CHECK(back.form.rank == 2);
    }
}

TEST_CASE("flat entries and integer elements") {
    json j{{"field", {{"p", 3}, {"k", 1}, {"modulus", {0, 1}}}}, {"n", 1}, {"kind", "symplectic"}, {"frobenius_exp", 0},
           {"entries", {1, 2, 0, 1}}};
    MatrixFile m = matrix_from_json(j);
    CHECK(m.g.M.at(0, 1) == 2);
    CHECK(m.g.M.at(1, 0) == 0);
}

TEST_CASE("space files") {
    Field F = field_of_order(4);
    for (FormKind k : {FormKind::Symplectic, FormKind::Parabolic, FormKind::Hyperbolic, FormKind::Elliptic, FormKind::Hermitian}) {
        ClassicalForm f = make_form(k, F, 2);
        ClassicalForm back = space_from_json(space_json(f));
        CHECK(back.kind == k);
        CHECK(back.gram == f.gram);
    }
    json bad = space_json(make_symplectic(F, 2));
    bad["coefficients"]["gram"][0][3] = json::array({0, 1});
    CHECK_THROWS_AS(space_from_json(bad), InputError);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(field_from_json(json{{"p", 4}}), InputError);
    CHECK_THROWS_AS(field_from_json(json{{"p", 2}, {"k", 2}, {"modulus", {1, 0, 1}}}), InputError);
    Field F = field_of_order(9);
    CHECK_THROWS_AS(elem_from_json(F, json::array({3})), InputError);
    CHECK_THROWS_AS(elem_from_json(F, json(9)), InputError);
    CHECK(elem_from_json(F, json::array({1, 1})) == F.from_coeffs({1, 1}));
    json j{{"field", {{"p", 3}}}, {"n", 1}, {"kind", "symplectic"}, {"entries", {{1, 0}}}};
    CHECK_THROWS_AS(matrix_from_json(j), InputError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("census report is stable") {
    Census c;
    c.elements = 3;
    c.symbols["C2;2^1"] = 2;
    c.symbols["C2;0^1"] = 1;
    c.invariants["nonempty"] = {2, 0, -1};
    CHECK(census_json(c).dump() == census_json(c).dump());
    CHECK(census_csv(c).find("symbol,C2;0^1,1\nsymbol,C2;2^1,2\n") != std::string::npos);
    CHECK(hex64(content_hash("")) == "cbf29ce484222325");
}
