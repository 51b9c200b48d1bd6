#include "polaris/chevalley.hpp"

#include <sstream>
#include <stdexcept>

namespace polaris {

int ambient_dim(Family f, int n) {
    switch (f) {
    case Family::A: return n + 1;
    case Family::B: return 2 * n + 1;
    default: return 2 * n;
    }
}

ClassicalForm chevalley_form(Family f, const Field& F, int n) {
    switch (f) {
    case Family::B: return make_parabolic(F, n);
    case Family::C: return make_symplectic(F, n);
    case Family::D: return make_hyperbolic(F, n);
    default: throw std::invalid_argument("type A has no polar space");
    }
}

namespace {

// matrix index of a 1-based Chevalley coordinate (B keeps index 0 for the anisotropic vector)
int idx(Family f, int p) { return f == Family::B ? p : p - 1; }

void put(const Field& F, Mat& M, Family f, int r, int c, Elem v) {
    Elem& x = M.at(idx(f, r), idx(f, c));
    x = F.add(x, v);
}

} // namespace

SemilinearMap chevalley_generator(const Field& F, Family f, int n, const std::vector<int>& root, Elem a) {
    RootSystem rs = build_root_system(f, n);
    if (static_cast<int>(root.size()) != rs.dim || !rs.is_root(root)) throw std::invalid_argument("not a root");
    const int D = ambient_dim(f, n);
    Mat M = Mat::identity(D);
    std::vector<int> e = root;
    bool neg = false;
    // reduce to a positive form of the root
    int first = 0;
    while (e[first] == 0) ++first;
    if (f != Family::A && e[first] < 0) {
        for (int& x : e) x = -x;
        neg = true;
    }
    std::vector<int> supp;
    for (int i = 0; i < rs.dim; ++i)
        if (e[i]) supp.push_back(i + 1);
    Elem na = F.neg(a);
    if (f == Family::A) {
        int i = supp[0], j = supp[1];
        if (e[i - 1] < 0) std::swap(i, j);
        put(F, M, f, i, j, a);
        return {M, 0};
    }
    if (supp.size() == 2) {
        int i = supp[0], j = supp[1];
        if (e[i - 1] * e[j - 1] < 0) {
            if (e[i - 1] < 0) std::swap(i, j);
            put(F, M, f, i, j, a);
            put(F, M, f, n + j, n + i, na);
        } else {
            put(F, M, f, i, n + j, a);
            put(F, M, f, j, n + i, f == Family::C ? a : na);
        }
    } else {
        int k = supp[0];
        if (f == Family::B) {
            // the transpose preserves the dual quadric only when 2 = 1/2; conjugate by x_k <-> x_{n+k} instead
            int u = neg ? n + k : k, v = neg ? k : n + k;
            Elem s = neg ? na : a;
            put(F, M, f, u, 0, F.add(s, s));
            put(F, M, f, 0, v, F.neg(s));
            put(F, M, f, u, v, F.neg(F.mul(a, a)));
            return {M, 0};
        } else {
            put(F, M, f, k, n + k, a);
        }
    }
    if (neg) M = transpose(M);
    return {M, 0};
}

std::vector<SemilinearMap> chevalley_group_generators(Family f, int n, const Field& F) {
    RootSystem rs = build_root_system(f, n);
    std::vector<SemilinearMap> out;
    for (const auto& a : rs.simple) {
        std::vector<int> m = a;
        for (int& x : m) x = -x;
        long pk = 1;
        for (int j = 0; j < F.k; ++j, pk *= F.p) {
            Elem c = static_cast<Elem>(pk);
            out.push_back(chevalley_generator(F, f, n, a, c));
            out.push_back(chevalley_generator(F, f, n, m, c));
        }
    }
    return out;
}

SemilinearMap dn_swap(const Field& F, int n) {
    (void)F;
    if (n < 2) throw std::invalid_argument("rank out of range");
    Mat M = Mat::identity(2 * n);
    M.at(n - 1, n - 1) = 0;
    M.at(2 * n - 1, 2 * n - 1) = 0;
    M.at(n - 1, 2 * n - 1) = 1;
    M.at(2 * n - 1, n - 1) = 1;
    return {M, 0};
}

SemilinearMap generic_unipotent(const Field& F, const Diagram& d, const std::vector<Elem>& coeffs) {
    Extraction ex = is_polar_closed(d);
    if (!ex.closed) throw std::invalid_argument("diagram is not polar closed");
    if (coeffs.size() != ex.roots.size()) throw std::invalid_argument("coefficient count must match the extraction length");
    SemilinearMap g{Mat::identity(ambient_dim(d.family, d.n)), 0};
    for (size_t t = 0; t < coeffs.size(); ++t) {
        if (!coeffs[t]) throw std::invalid_argument("coefficients must be nonzero");
        g = compose(F, g, chevalley_generator(F, d.family, d.n, ex.roots[t].e, coeffs[t]));
    }
    return g;
}

SemilinearMap homology_B(int n, int i, const Field& F) {
    if (F.p == 2) throw std::invalid_argument("homologies need odd characteristic");
    if (i < 1 || i >= n) throw std::invalid_argument("index out of range");
    int ip = i / 2;
    Mat M = Mat::identity(2 * n + 1);
    Elem m1 = F.neg(1);
    if (i % 2) M.at(0, 0) = m1;
    for (int t = 1; t <= ip; ++t) {
        M.at(t, t) = m1;
        M.at(n + t, n + t) = m1;
    }
    return {M, 0};
}

SemilinearMap homology_C(int n, int i, const Field& F) {
    if (F.p == 2) throw std::invalid_argument("homologies need odd characteristic");
    if (i < 1 || 2 * i > n) throw std::invalid_argument("index out of range");
    Mat M = Mat::identity(2 * n);
    Elem m1 = F.neg(1);
    for (int t = 0; t < i; ++t) {
        M.at(t, t) = m1;
        M.at(n + t, n + t) = m1;
    }
    return {M, 0};
}

bool preserves_form(const ClassicalForm& form, const SemilinearMap& g, Elem* scalar) {
    const Field& F = form.F;
    const int D = form.dim;
    if (g.M.n != D || !invertible(F, g.M)) return false;
    std::vector<std::vector<Elem>> img(D, std::vector<Elem>(D));
    for (int c = 0; c < D; ++c)
        for (int r = 0; r < D; ++r) img[c][r] = g.M.at(r, c); // image of a basis vector with entries in the prime field
    Elem lambda = 0;
    auto agree = [&](Elem before, Elem after) {
        // after must equal lambda * sigma^frob(before)
        Elem want = F.frob(before, g.frob);
        if (!want) return after == 0;
        Elem l = F.div(after, want);
        if (!lambda) lambda = l;
        return l == lambda;
    };
    std::vector<Elem> ei(D), ej(D);
    for (int i = 0; i < D; ++i) {
        std::fill(ei.begin(), ei.end(), 0);
        ei[i] = 1;
        for (int j = 0; j < D; ++j) {
            std::fill(ej.begin(), ej.end(), 0);
            ej[j] = 1;
            if (!agree(form.bilinear(ei.data(), ej.data()), form.bilinear(img[i].data(), img[j].data()))) return false;
        }
    }
    if (form.orthogonal()) {
        for (int i = 0; i < D; ++i) {
            std::fill(ei.begin(), ei.end(), 0);
            ei[i] = 1;
            if (!agree(form.quadratic(ei.data()), form.quadratic(img[i].data()))) return false;
        }
        // the polar form can vanish identically on pairs in characteristic 2; use sums as well
        for (int i = 0; i < D; ++i)
            for (int j = i + 1; j < D; ++j) {
                std::vector<Elem> s(D), t(D);
                for (int r = 0; r < D; ++r) t[r] = F.add(img[i][r], img[j][r]);
                s[i] = 1;
                s[j] = 1;
                if (!agree(form.quadratic(s.data()), form.quadratic(t.data()))) return false;
            }
    }
    if (!lambda) return false;
    if (scalar) *scalar = lambda;
    return true;
}

namespace {

bool has_eigenvalue(const Field& F, const Mat& M) {
    for (int l = 1; l < F.q; ++l) {
        Mat A = M;
        for (int i = 0; i < A.n; ++i) A.at(i, i) = F.sub(A.at(i, i), static_cast<Elem>(l));
        if (det(F, A) == 0) return true;
    }
    return false;
}

} // namespace

SemilinearMap symplectic_ffi(int n, const Field& F, std::optional<Elem> bopt) {
    if (F.p == 2) throw std::invalid_argument("needs odd characteristic");
    if (n % 2 != 0 || n < 2) throw std::invalid_argument("rank must be even");
    Elem b = 0;
    if (bopt) {
        b = *bopt;
    } else {
        for (int x = 1; x < F.q && !b; ++x)
            if (!F.is_square(F.neg(static_cast<Elem>(x)))) b = static_cast<Elem>(x);
    }
    if (!b || F.is_square(F.neg(b))) throw std::invalid_argument("-b must be a nonsquare");
    // core on (x0, x1, x2, x3) with form x0y1 - x1y0 + x2y3 - x3y2
    const Elem core[4][4] = {{0, 0, 0, F.neg(b)}, {0, 0, F.neg(1), 0}, {0, b, 0, 0}, {1, 0, 0, 0}};
    Mat M(2 * n);
    for (int blk = 0; blk < n / 2; ++blk) {
        int a = 2 * blk, c = 2 * blk + 1;
        const int map[4] = {a, n + a, c, n + c};
        for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s) M.at(map[r], map[s]) = core[r][s];
    }
    SemilinearMap g{M, 0};
    if (!preserves_form(make_symplectic(F, n), g)) throw std::logic_error("symplectic_ffi: form not preserved");
    if (has_eigenvalue(F, M)) throw std::logic_error("symplectic_ffi: fixed point found");
    return g;
}

SemilinearMap hyperbolic_ffi(int n, const Field& F, Elem t, Elem d) {
    if (n % 2 != 0 || n < 2) throw std::invalid_argument("rank must be even");
    for (int x = 0; x < F.q; ++x) {
        Elem xe = static_cast<Elem>(x);
        if (F.add(F.sub(F.mul(xe, xe), F.mul(t, xe)), d) == 0) throw std::invalid_argument("x^2 - tx + d has a root");
    }
    Mat M(2 * n);
    // A = [[0, -d], [1, t]] on (x_a, x_c); d A^{-T} = [[t, -1], [d, 0]] on the partner coordinates
    for (int blk = 0; blk < n / 2; ++blk) {
        int a = 2 * blk, c = 2 * blk + 1;
        M.at(a, c) = F.neg(d);
        M.at(c, a) = 1;
        M.at(c, c) = t;
        M.at(n + a, n + a) = t;
        M.at(n + a, n + c) = F.neg(1);
        M.at(n + c, n + a) = d;
    }
    SemilinearMap g{M, 0};
    if (!preserves_form(make_hyperbolic(F, n), g)) throw std::logic_error("hyperbolic_ffi: quadric not preserved");
    if (has_eigenvalue(F, M)) throw std::logic_error("hyperbolic_ffi: fixed point found");
    return g;
}

SemilinearMap hermitian_block_map(int n, const Field& F, Elem r) {
    if (F.k % 2 != 0) throw std::invalid_argument("hermitian spaces need a field of square order");
    if (n % 2 != 0) throw std::invalid_argument("rank must be even");
    auto neg_i = [n](int l) { return n - l; };     // x_{-l}
    auto pos_i = [n](int l) { return n + l - 1; }; // x_{l}
    Mat M(2 * n);
    Elem mr = F.neg(r);
    for (int l = 1; 2 * l <= n; ++l) {
        M.at(neg_i(2 * l), neg_i(2 * l - 1)) = 1;
        M.at(neg_i(2 * l - 1), neg_i(2 * l)) = mr;
        M.at(pos_i(2 * l - 1), pos_i(2 * l)) = 1;
        M.at(pos_i(2 * l), pos_i(2 * l - 1)) = mr;
    }
    return {M, F.k / 2};
}

HermitianSearch hermitian_ffi(const PolarSpace& H) {
    if (H.form.kind != FormKind::Hermitian) throw std::invalid_argument("needs a hermitian space");
    const Field& F = H.form.F;
    HermitianSearch out;
    std::ostringstream rep;
    std::vector<Elem> img(H.D);
    for (int r = 1; r < F.q; ++r) {
        SemilinearMap g = hermitian_block_map(H.n, F, static_cast<Elem>(r));
        HermitianSearch::Trial tr{static_cast<Elem>(r), preserves_form(H.form, g), 0};
        if (tr.isometry) {
            for (int p = 0; p < H.N; ++p) {
                apply(F, g, H.point(p), img.data());
                tr.fixed_points += (H.index_of(img.data()) == p);
            }
        }
        out.trials.push_back(tr);
        rep << "r=" << r << (tr.isometry ? "" : " not an isometry");
        if (tr.isometry) rep << " fixed points " << tr.fixed_points;
        rep << "\n";
        if (tr.isometry && tr.fixed_points == 0 && !out.map) out.map = g;
    }
    if (!out.map) rep << "search exhausted: every isometric candidate fixes a point\n";
    out.report = rep.str();
    return out;
}

HermitianSearch hermitian_ffi(int n, const Field& F) { return hermitian_ffi(build_polar_space(make_hermitian(F, n))); }

SemilinearMap baer_involution(int n, const Field& F) {
    if (F.k % 2 != 0) throw std::invalid_argument("hermitian spaces need a field of square order");
    return {Mat::identity(2 * n), F.k / 2};
}

SemilinearMap opposite_rootgroup_word(int n, const Field& F, const std::vector<RootLetter>& word) {
    std::vector<int> phi(n, 0);
    phi[0] = 2;
    std::vector<int> mphi(n, 0);
    mphi[0] = -2;
    SemilinearMap g{Mat::identity(2 * n), 0};
    for (const auto& l : word) g = compose(F, g, chevalley_generator(F, Family::C, n, l.negative ? mphi : phi, l.a));
    return g;
}

std::vector<RootLetter> torus_word(const Field& F, Elem t) {
    if (!t) throw std::invalid_argument("torus parameter must be nonzero");
    // h(t) = w(t) w(-1) with w(s) = x(s) y(-1/s) x(s)
    auto w = [&](Elem s) {
        return std::vector<RootLetter>{{false, s}, {true, F.neg(F.inv(s))}, {false, s}};
    };
    auto a = w(t), b = w(F.neg(1));
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace polaris
