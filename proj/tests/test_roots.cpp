#include "test_main.hpp"

#include <set>

#include "polaris/roots.hpp"

using namespace polaris;

namespace {

// oracle: positive roots written down from the classical e-basis description
std::set<std::vector<int>> classical_positive(Family f, int n) {
    int dim = f == Family::A ? n + 1 : n;
    std::set<std::vector<int>> out;
    auto vec = [&](int i, int si, int j, int sj) {
        std::vector<int> v(dim, 0);
        v[i] += si;
        if (j >= 0) v[j] += sj;
        return v;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            out.insert(vec(i, 1, j, -1));
            if (f != Family::A) out.insert(vec(i, 1, j, 1));
        }
    for (int i = 0; i < n && f != Family::A && f != Family::D; ++i) out.insert(vec(i, f == Family::B ? 1 : 2, -1, 0));
    return out;
}

} // namespace

TEST_CASE("positive roots match the classical lists") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        for (int n = (f == Family::D ? 4 : 2); n <= 8; ++n) {
            RootSystem rs = build_root_system(f, n);
            std::set<std::vector<int>> got;
            for (const auto& r : rs.positive) {
                got.insert(r.e);
                for (int c : r.c) CHECK(c >= 0);
                // simple coordinates reproduce the e-vector
                std::vector<int> back(rs.dim, 0);
                for (int i = 0; i < n; ++i)
                    for (int t = 0; t < rs.dim; ++t) back[t] += r.c[i] * rs.simple[i][t];
                CHECK(back == r.e);
            }
            CHECK(got == classical_positive(f, n));
            size_t expect = f == Family::A ? n * (n + 1) / 2 : (f == Family::D ? n * (n - 1) : n * n);
            CHECK(rs.positive.size() == expect);
            int top = 0, count = 0;
            for (const auto& r : rs.positive) top = std::max(top, r.height);
            for (const auto& r : rs.positive) count += (r.height == top);
            CHECK(count == 1);
            for (const auto& a : rs.simple) CHECK(dot(rs.highest.e, a) >= 0);
        }
    }
}

TEST_CASE("highest roots") {
    auto a3 = build_root_system(Family::A, 3);
    CHECK(a3.positive.size() == 6);
    CHECK(a3.highest.e == std::vector<int>{1, 0, 0, -1});
    CHECK(build_root_system(Family::B, 5).highest.c == std::vector<int>{1, 2, 2, 2, 2});
    CHECK(build_root_system(Family::C, 3).highest.e == std::vector<int>{2, 0, 0});
    CHECK(build_root_system(Family::D, 5).highest.e == std::vector<int>{1, 1, 0, 0, 0});
    CHECK_THROWS(build_root_system(Family::D, 3));
    CHECK_THROWS(build_root_system(Family::B, 1));
}

TEST_CASE("polar types") {
    CHECK(polar_type(build_root_system(Family::C, 5)) == std::vector<int>{1});
    CHECK(polar_type(build_root_system(Family::A, 4)) == std::vector<int>{1, 4});
    CHECK(polar_type(build_root_system(Family::D, 6)) == std::vector<int>{2});
    CHECK(polar_type(build_root_system(Family::B, 3)) == std::vector<int>{2});
}

TEST_CASE("opposition involution is a diagram automorphism") {
    CHECK(opposition_involution(build_root_system(Family::D, 7)) == std::vector<int>{1, 2, 3, 4, 5, 7, 6});
    CHECK(opposition_involution(build_root_system(Family::B, 4)) == std::vector<int>{1, 2, 3, 4});
    CHECK(opposition_involution(build_root_system(Family::A, 5)) == std::vector<int>{5, 4, 3, 2, 1});
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int n = (f == Family::D ? 4 : 2); n <= 8; ++n) {
            RootSystem rs = build_root_system(f, n);
            auto pi = opposition_involution(rs);
            for (int a = 1; a <= n; ++a) {
                CHECK(pi[pi[a - 1] - 1] == a);
                for (int b = 1; b <= n; ++b) {
                    CHECK(dot(rs.simple[a - 1], rs.simple[b - 1]) ==
                          dot(rs.simple[pi[a - 1] - 1], rs.simple[pi[b - 1] - 1]));
                }
            }
        }
}
