#include "test_main.hpp"

#include <deque>
#include <random>

#include "polaris/chevalley.hpp"
#include "polaris/opposition.hpp"

using namespace polaris;

namespace {

std::vector<int> long_root(int n) {
    std::vector<int> r(n, 0);
    r[0] = 2;
    return r;
}

bool closed_type_preserving(const Diagram& d) {
    if (d.special || !is_polar_closed(d).closed) return false;
    if (d.family == Family::D) return d.t == (d.n % 2 ? 2 : 1);
    return true;
}

} // namespace

TEST_CASE("validation") {
    Field F = field_of_order(3);
    PolarSpace P = build_polar_space(make_symplectic(F, 2));
    Collineation id = validate(P, {Mat::identity(4), 0});
    CHECK(id.trivial);
    CHECK(opposition_diagram(id).empty());
    CHECK(opposition_diagram(id).symbol == "C2;0^1");
    CHECK(classify_class(id) == CollineationClass::Identity);
    CHECK_NOTHROW(validate(P, chevalley_generator(F, Family::C, 2, {1, -1}, 2)));
    std::mt19937_64 rng(3);
    int rejected = 0;
    for (int t = 0; t < 20; ++t) {
        Mat M(4);
        for (auto& x : M.a) x = static_cast<Elem>(rng() % 3);
        try {
            validate(P, {M, 0});
        } catch (const std::invalid_argument&) {
            ++rejected;
        }
    }
    CHECK(rejected >= 19);
    CHECK_THROWS(validate(P, {Mat::identity(5), 0}));
}

TEST_CASE("long root elations") {
    for (int q : {2, 3}) {
        Field F = field_of_order(q);
        PolarSpace P = build_polar_space(make_symplectic(F, 3));
        Collineation th = validate(P, chevalley_generator(F, Family::C, 3, long_root(3), 1));
        CHECK(is_nondomestic_dim(th, 0).has_value());
        CHECK_FALSE(is_nondomestic_dim(th, 1).has_value());
        CHECK_FALSE(is_nondomestic_dim(th, 2).has_value());
        auto r = opposition_diagram(th);
        CHECK(r.symbol == "C3;1^1");
        if (q == 2) CHECK(r.alias == "B3;1^1");
        CHECK(is_central_elation(th));
        CHECK(classify_class(th, r) == CollineationClass::I);
        for (const auto& w : r.witnesses) CHECK(maps_opposite(th, w.basis.data(), static_cast<int>(w.basis.size())));
        CHECK(corank_of_fixed_set(th) == 1);
    }
}

TEST_CASE("generic unipotents realise their diagrams") {
    for (int q : {2, 3}) {
        Field F = field_of_order(q);
        for (Family f : {Family::B, Family::C, Family::D}) {
            int n = f == Family::D ? 4 : 3;
            PolarSpace P = build_polar_space(chevalley_form(f, F, n));
            for (const Diagram& d : catalog(f, n)) {
                if (!closed_type_preserving(d)) continue;
                Extraction ex = is_polar_closed(d);
                SemilinearMap g = generic_unipotent(F, d, std::vector<Elem>(ex.roots.size(), 1));
                Collineation th = validate(P, g);
                auto r = opposition_diagram(th);
                CAPTURE(format_symbol(d));
                CHECK(r.symbol == format_symbol(d));
                CHECK(is_unipotent(F, g));
            }
        }
    }
}

TEST_CASE("full unipotent diagram maps a chamber to an opposite") {
    for (int q : {2, 3}) {
        Field F = field_of_order(q);
        PolarSpace P = build_polar_space(make_symplectic(F, 2));
        Diagram d = parse_symbol("C2;2^1");
        Extraction ex = is_polar_closed(d);
        Collineation th = validate(P, generic_unipotent(F, d, std::vector<Elem>(ex.roots.size(), 1)));
        auto flag = chamber_nondomestic(th);
        REQUIRE(flag.has_value());
        std::vector<std::vector<int>> img;
        for (const auto& x : *flag) {
            std::vector<int> y;
            for (int p : x) y.push_back(th.perm[p]);
            img.push_back(y);
        }
        CHECK(flags_opposite(P, *flag, img));
        CHECK(classify_class(th) == CollineationClass::NotDomestic);
        CHECK_FALSE(chamber_nondomestic(validate(P, {Mat::identity(4), 0})).has_value());
    }
}

TEST_CASE("homologies") {
    Field F = field_of_order(3);
    PolarSpace W = build_polar_space(make_symplectic(F, 2));
    Collineation h = validate(W, homology_C(2, 1, F));
    CHECK(opposition_diagram(h).symbol == "C2;1^2");
    CHECK(is_homology_pattern(h, 2, 2));
    CHECK_FALSE(is_homology_pattern(h, 3, 1));
    CHECK(classify_class(h) == CollineationClass::II);

    PolarSpace Q = build_polar_space(make_parabolic(F, 3));
    for (int i = 1; i < 3; ++i) {
        Collineation hb = validate(Q, homology_B(3, i, F));
        auto r = opposition_diagram(hb);
        CHECK(r.symbol == "B3;" + std::to_string(i) + "^1");
        CHECK(corank_of_fixed_set(hb) == i);
        CHECK(classify_class(hb, r) == CollineationClass::I);
    }
    FixedStructure fs = fixed_structure(validate(Q, homology_B(3, 2, F)));
    CHECK(fs.eigen_corank == 2);
}

TEST_CASE("axial elations") {
    Field F = field_of_order(3);
    PolarSpace Q = build_polar_space(make_parabolic(F, 3));
    Collineation th = validate(Q, chevalley_generator(F, Family::B, 3, {1, 1, 0}, 1));
    CHECK(is_axial(th));
    CHECK_FALSE(is_central_elation(th));
    CHECK_FALSE(is_axial(validate(Q, homology_B(3, 1, F))));
}

TEST_CASE("identity fixed structure") {
    Field F = field_of_order(2);
    PolarSpace P = build_polar_space(make_symplectic(F, 2));
    FixedStructure fs = fixed_structure(validate(P, {Mat::identity(4), 0}));
    CHECK(fs.point_count == 15);
    CHECK(fs.lines.size() == 15);
    CHECK(fs.subspace);
    CHECK(fs.corank == 0);
}

TEST_CASE("fixed point free symplectic quadrangle map") {
    Field F = field_of_order(3);
    PolarSpace P = build_polar_space(make_symplectic(F, 2));
    Collineation th = validate(P, symplectic_ffi(2, F));
    FixedStructure fs = fixed_structure(th);
    CHECK(fs.point_count == 0);
    CHECK(fs.lines.size() == 10);
    CHECK(is_point_domestic(th));
    CHECK(pdlinefixed(th));
    auto r = opposition_diagram(th);
    CHECK(r.symbol == "C2;1^2");
    CHECK(classify_class(th, r) == CollineationClass::III);
    // the fixed lines partition the points
    std::vector<int> hits(P.N, 0);
    for (const auto& L : fs.lines)
        for (int x : P.span_points(L.data(), 2)) ++hits[x];
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST_CASE("fixed point free hyperbolic map") {
    Field F = field_of_order(2);
    PolarSpace P = build_polar_space(make_hyperbolic(F, 4));
    Collineation th = validate(P, hyperbolic_ffi(4, F, 1, 1));
    auto r = opposition_diagram(th);
    CHECK(r.symbol == "D4;2^2");
    CHECK(classify_class(th, r) == CollineationClass::III);
    DerivedGeometry g = fixed_line_geometry(th);
    CHECK(g.points == 45);
    CHECK(g.lines == 27);
    CHECK(g.one_or_all);
    CHECK(g.rank == 2);
}

TEST_CASE("fork swap") {
    Field F = field_of_order(2);
    PolarSpace P = build_polar_space(make_hyperbolic(F, 4));
    Collineation s = validate(P, dn_swap(F, 4));
    CHECK(s.swaps_classes);
    auto r = opposition_diagram(s);
    CHECK(r.twist == 2);
    CHECK(r.capped());
    CHECK(r.match->t == 2);
    PolarSpace P5 = build_polar_space(make_hyperbolic(F, 5));
    auto id5 = opposition_diagram(validate(P5, {Mat::identity(10), 0}));
    CHECK(id5.twist == 2);
    CHECK(id5.symbol == "2D5;0^1");
}

TEST_CASE("baer involution") {
    Field F = field_of_order(4);
    PolarSpace H = build_polar_space(make_hermitian(F, 3));
    Collineation th = validate(H, baer_involution(3, F));
    CHECK(fixed_point_count(th) == 63);
    CHECK(is_point_domestic(th));
    CHECK(classify_class(th) == CollineationClass::II);
}

TEST_CASE("group closure") {
    Field F3 = field_of_order(3);
    GroupClosure G = enumerate_group(F3, chevalley_group_generators(Family::C, 2, F3));
    CHECK(G.complete);
    CHECK(G.size() == 51840);
    GroupClosure T = enumerate_group(F3, {{Mat::identity(4), 0}});
    CHECK(T.size() == 1);
    GroupClosure B = enumerate_group(F3, chevalley_group_generators(Family::C, 2, F3), 1000);
    CHECK_FALSE(B.complete);
    CHECK(B.size() == 1000);
    // |SL_3(4)| = 4^3 * 15 * 63
    Field F4 = field_of_order(4);
    GroupClosure S = enumerate_group(F4, chevalley_group_generators(Family::A, 1 + 1, F4));
    CHECK(S.size() == 60480);
}

TEST_CASE("chamber opposition on the symplectic quadrangle over GF(2)") {
    // chambers are incident point-line pairs; the chamber graph has diameter 4
    Field F = field_of_order(2);
    PolarSpace P = build_polar_space(make_symplectic(F, 2));
    const auto& lines = P.subspaces(1);
    std::vector<std::pair<int, std::vector<int>>> ch;
    std::vector<std::vector<int>> line_pts;
    for (size_t l = 0; l < lines.count(); ++l) line_pts.push_back(P.span_points(lines.at(l), 2));
    std::vector<std::pair<int, int>> flags;
    for (size_t l = 0; l < lines.count(); ++l)
        for (int x : line_pts[l]) flags.push_back({x, static_cast<int>(l)});
    REQUIRE(flags.size() == 45);
    const size_t C = flags.size();
    std::vector<std::vector<int>> dist(C, std::vector<int>(C, -1));
    for (size_t s = 0; s < C; ++s) {
        std::deque<size_t> q{s};
        dist[s][s] = 0;
        while (!q.empty()) {
            size_t a = q.front();
            q.pop_front();
            for (size_t b = 0; b < C; ++b) {
                bool adj = a != b && (flags[a].first == flags[b].first || flags[a].second == flags[b].second);
                if (adj && dist[s][b] < 0) {
                    dist[s][b] = dist[s][a] + 1;
                    q.push_back(b);
                }
            }
        }
    }
    long agree = 0;
    for (size_t a = 0; a < C; ++a)
        for (size_t b = 0; b < C; ++b) {
            std::vector<std::vector<int>> fa{{flags[a].first}, {lines.at(flags[a].second)[0], lines.at(flags[a].second)[1]}};
            std::vector<std::vector<int>> fb{{flags[b].first}, {lines.at(flags[b].second)[0], lines.at(flags[b].second)[1]}};
            agree += flags_opposite(P, fa, fb) == (dist[a][b] == 4);
        }
    CHECK(agree == static_cast<long>(C * C));
}
