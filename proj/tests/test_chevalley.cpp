#include "test_main.hpp"

#include <set>

#include "polaris/chevalley.hpp"

using namespace polaris;

namespace {

SemilinearMap ident(int D) { return {Mat::identity(D), 0}; }

bool is_unipotent(const Field& F, const SemilinearMap& g) {
    long e = F.p;
    while (e < g.M.n) e *= F.p;
    return power(F, g, e) == ident(g.M.n);
}

// group commutator a^-1 b^-1 a b for linear maps
Mat commutator(const Field& F, const Mat& a, const Mat& b) {
    return mat_mul(F, mat_mul(F, inverse(F, a), inverse(F, b)), mat_mul(F, a, b));
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> s(a.size());
    for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
}

std::vector<std::vector<int>> all_roots(const RootSystem& rs) {
    std::vector<std::vector<int>> out;
    for (const auto& r : rs.positive) {
        out.push_back(r.e);
        std::vector<int> m = r.e;
        for (int& x : m) x = -x;
        out.push_back(m);
    }
    return out;
}

long fixed_points(const PolarSpace& P, const SemilinearMap& g) {
    std::vector<Elem> img(P.D);
    long c = 0;
    for (int p = 0; p < P.N; ++p) {
        apply(P.form.F, g, P.point(p), img.data());
        c += P.index_of(img.data()) == p;
    }
    return c;
}

bool point_domestic(const PolarSpace& P, const SemilinearMap& g) {
    std::vector<Elem> img(P.D);
    for (int p = 0; p < P.N; ++p) {
        apply(P.form.F, g, P.point(p), img.data());
        if (!P.collinear(p, P.index_of(img.data()))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("generators are unipotent isometries") {
    for (int q : {2, 3, 4, 5}) {
        Field F = field_of_order(q);
        for (Family f : {Family::B, Family::C, Family::D}) {
            for (int n = (f == Family::D ? 4 : 2); n <= 4; ++n) {
                ClassicalForm form = chevalley_form(f, F, n);
                RootSystem rs = build_root_system(f, n);
                for (const auto& r : all_roots(rs)) {
                    for (int a = 1; a < q; ++a) {
                        SemilinearMap g = chevalley_generator(F, f, n, r, static_cast<Elem>(a));
                        Elem lam = 0;
                        CHECK(preserves_form(form, g, &lam));
                        CHECK(lam == 1);
                        CHECK(det(F, g.M) == 1);
                        CHECK(is_unipotent(F, g));
                        CHECK_FALSE(g == ident(form.dim));
                    }
                }
            }
        }
    }
}

TEST_CASE("root subgroups are additive") {
    Field F = field_of_order(5);
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        int n = f == Family::D ? 4 : 3;
        RootSystem rs = build_root_system(f, n);
        for (const auto& r : all_roots(rs))
            for (int a = 0; a < 5; ++a)
                for (int b = 0; b < 5; ++b) {
                    auto ga = chevalley_generator(F, f, n, r, a), gb = chevalley_generator(F, f, n, r, b);
                    CHECK(compose(F, ga, gb) == chevalley_generator(F, f, n, r, F.add(a, b)));
                }
    }
}

TEST_CASE("commuting root groups") {
    // x_a and x_b commute when a + b is neither a root nor zero
    for (int q : {3, 4}) {
        Field F = field_of_order(q);
        for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
            int n = f == Family::D ? 4 : 3;
            RootSystem rs = build_root_system(f, n);
            auto R = all_roots(rs);
            for (const auto& a : R)
                for (const auto& b : R) {
                    auto s = add(a, b);
                    bool zero = std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
                    Mat c = commutator(F, chevalley_generator(F, f, n, a, 1).M, chevalley_generator(F, f, n, b, 2).M);
                    if (!zero && !rs.is_root(s)) CHECK(c == Mat::identity(c.n));
                    if (rs.is_root(s) && f != Family::B && !(f == Family::C && F.p == 2)) CHECK_FALSE(c == Mat::identity(c.n));
                }
        }
    }
}

TEST_CASE("weyl elements are monomial") {
    Field F = field_of_order(7);
    for (Family f : {Family::B, Family::C, Family::D}) {
        int n = f == Family::D ? 4 : 3;
        RootSystem rs = build_root_system(f, n);
        for (const auto& r : rs.positive) {
            std::vector<int> m = r.e;
            for (int& x : m) x = -x;
            SemilinearMap w = compose(F, compose(F, chevalley_generator(F, f, n, r.e, 1), chevalley_generator(F, f, n, m, F.neg(1))),
                                      chevalley_generator(F, f, n, r.e, 1));
            for (int i = 0; i < w.M.n; ++i) {
                int nz = 0;
                for (int j = 0; j < w.M.n; ++j) nz += w.M.at(i, j) != 0;
                CHECK(nz == 1);
            }
        }
    }
}

TEST_CASE("invalid roots are rejected") {
    Field F = field_of_order(3);
    CHECK_THROWS(chevalley_generator(F, Family::C, 3, {1, 1, 1}, 1));
    CHECK_THROWS(chevalley_generator(F, Family::D, 4, {2, 0, 0, 0}, 1));
    CHECK_THROWS(chevalley_generator(F, Family::B, 3, {1, 0}, 1));
}

TEST_CASE("dn swap exchanges the maximal classes") {
    for (int q : {2, 3}) {
        Field F = field_of_order(q);
        PolarSpace P = build_polar_space(make_hyperbolic(F, 4));
        SemilinearMap s = dn_swap(F, 4);
        CHECK(preserves_form(P.form, s));
        CHECK(compose(F, s, s) == ident(8));
        SingularSubspace img;
        std::vector<std::vector<Elem>> vecs;
        for (int b : P.reference_maximal().basis) {
            std::vector<Elem> v(P.D);
            apply(F, s, P.point(b), v.data());
            vecs.push_back(v);
        }
        img.basis = P.canonical_basis(vecs);
        CHECK(oriflamme_type(P, img) == 3);
    }
}

TEST_CASE("generic unipotent elements") {
    Field F = field_of_order(3);
    Diagram d = parse_symbol("C3;2^1");
    Extraction ex = is_polar_closed(d);
    std::vector<Elem> c(ex.roots.size(), 1);
    SemilinearMap g = generic_unipotent(F, d, c);
    CHECK(preserves_form(make_symplectic(F, 3), g));
    CHECK(is_unipotent(F, g));
    CHECK_THROWS(generic_unipotent(F, d, std::vector<Elem>(c.size() + 1, 1)));
    CHECK_THROWS(generic_unipotent(F, parse_symbol("D5;5^1"), {1}));
}

TEST_CASE("homologies") {
    Field F = field_of_order(3);
    for (int n = 2; n <= 4; ++n) {
        for (int i = 1; i < n; ++i) {
            SemilinearMap h = homology_B(n, i, F);
            CHECK(preserves_form(make_parabolic(F, n), h));
            CHECK(compose(F, h, h) == ident(2 * n + 1));
            int minus = 0;
            for (int t = 0; t < h.M.n; ++t) minus += h.M.at(t, t) == F.neg(1);
            CHECK(minus == (i % 2) + 2 * (i / 2));
            CHECK(det(F, h.M) == (i % 2 ? F.neg(1) : 1));
        }
        for (int i = 1; 2 * i <= n; ++i) {
            SemilinearMap h = homology_C(n, i, F);
            CHECK(preserves_form(make_symplectic(F, n), h));
            int minus = 0;
            for (int t = 0; t < h.M.n; ++t) minus += h.M.at(t, t) == F.neg(1);
            CHECK(minus == 2 * i);
        }
    }
    CHECK_THROWS(homology_B(3, 1, field_of_order(2)));
    CHECK_THROWS(homology_C(3, 2, F));
}

TEST_CASE("fixed point free symplectic map") {
    for (int q : {3, 5}) {
        Field F = field_of_order(q);
        for (int n : {2, 4}) {
            if (q == 5 && n == 4) continue;
            SemilinearMap g = symplectic_ffi(n, F);
            PolarSpace P = build_polar_space(make_symplectic(F, n));
            CHECK(fixed_points(P, g) == 0);
            CHECK(point_domestic(P, g));
            // projective involution
            CHECK(scalar_of(compose(F, g, g).M) != 0);
        }
    }
    Field F = field_of_order(3);
    CHECK(symplectic_ffi(2, F).M.at(1, 2) == 1);
    CHECK_THROWS(symplectic_ffi(3, F));
    // over GF(3) the nonsquare b = 2 makes -b = 1 a square, so the core has eigenvectors
    CHECK_THROWS(symplectic_ffi(2, F, Elem{2}));
    CHECK_THROWS(symplectic_ffi(2, field_of_order(5), Elem{1}));
}

TEST_CASE("fixed point free hyperbolic map") {
    for (int q : {2, 3, 4}) {
        Field F = field_of_order(q);
        auto [t, d] = irreducible_quadratic(F);
        for (int n : {2, 4}) {
            SemilinearMap g = hyperbolic_ffi(n, F, t, d);
            PolarSpace P = build_polar_space(make_hyperbolic(F, n));
            CHECK(fixed_points(P, g) == 0);
            CHECK(point_domestic(P, g));
        }
    }
}

TEST_CASE("hermitian search and baer involution") {
    Field F = field_of_order(4);
    PolarSpace H = build_polar_space(make_hermitian(F, 3));
    SemilinearMap beta = baer_involution(3, F);
    CHECK(preserves_form(H.form, beta));
    // points of PG(5,2) are all isotropic for the restricted alternating form
    CHECK(fixed_points(H, beta) == 63);

    PolarSpace H4 = build_polar_space(make_hermitian(F, 2));
    HermitianSearch s = hermitian_ffi(H4);
    CHECK(s.trials.size() == 3);
    for (const auto& t : s.trials)
        if (t.isometry && t.fixed_points == 0) CHECK(s.map.has_value());
    MESSAGE(s.report);
}

TEST_CASE("long root words") {
    Field F = field_of_order(5);
    SemilinearMap w = opposite_rootgroup_word(3, F, {{false, 1}, {true, F.neg(1)}, {false, 1}});
    CHECK(w.M.at(0, 0) == 0);
    CHECK(w.M.at(3, 3) == 0);
    CHECK(F.mul(w.M.at(0, 3), w.M.at(3, 0)) == F.neg(1));
    SemilinearMap h = opposite_rootgroup_word(3, F, torus_word(F, 2));
    Mat want = Mat::identity(6);
    want.at(0, 0) = 2;
    want.at(3, 3) = F.inv(2);
    CHECK(h.M == want);
}
