#include "polaris/polar.hpp"

#include <algorithm>
#include <stdexcept>

namespace polaris {

std::string kind_name(FormKind k) {
    switch (k) {
    case FormKind::Symplectic: return "symplectic";
    case FormKind::Parabolic: return "parabolic";
    case FormKind::Hyperbolic: return "hyperbolic";
    case FormKind::Elliptic: return "elliptic";
    case FormKind::Hermitian: return "hermitian";
    }
    return "?";
}

FormKind kind_from_name(const std::string& s) {
    if (s == "symplectic") return FormKind::Symplectic;
    if (s == "parabolic") return FormKind::Parabolic;
    if (s == "hyperbolic") return FormKind::Hyperbolic;
    if (s == "elliptic") return FormKind::Elliptic;
    if (s == "hermitian" || s == "hermitian-minimal") return FormKind::Hermitian;
    throw std::invalid_argument("unknown form kind '" + s + "'");
}

void ClassicalForm::finalize() {
    gram_terms.clear();
    quad_terms.clear();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (gram.at(i, j)) gram_terms.push_back({i, j, gram.at(i, j)});
            if (quad.n && quad.at(i, j)) quad_terms.push_back({i, j, quad.at(i, j)});
        }
}

Elem ClassicalForm::bilinear(const Elem* x, const Elem* y) const {
    Elem acc = 0;
    for (const auto& t : gram_terms) {
        Elem yj = sigma ? F.frob(y[t.j], sigma) : y[t.j];
        acc = F.add(acc, F.mul(t.c, F.mul(x[t.i], yj)));
    }
    return acc;
}

Elem ClassicalForm::quadratic(const Elem* x) const {
    if (!orthogonal()) return kind == FormKind::Hermitian ? bilinear(x, x) : 0;
    Elem acc = 0;
    for (const auto& t : quad_terms) acc = F.add(acc, F.mul(t.c, F.mul(x[t.i], x[t.j])));
    return acc;
}

bool ClassicalForm::singular(const Elem* x) const {
    if (kind == FormKind::Symplectic) return true;
    return quadratic(x) == 0;
}

Family ClassicalForm::family() const {
    switch (kind) {
    case FormKind::Symplectic: return Family::C;
    case FormKind::Hyperbolic: return Family::D;
    default: return Family::B;
    }
}

namespace {

ClassicalForm blank(FormKind kind, const Field& F, int dim, int rank) {
    ClassicalForm f;
    f.kind = kind;
    f.F = F;
    f.dim = dim;
    f.rank = rank;
    f.gram = Mat(dim);
    if (f.orthogonal()) f.quad = Mat(dim);
    return f;
}

void polarize(ClassicalForm& f) {
    const Field& F = f.F;
    for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j) {
            if (i == j)
                f.gram.at(i, i) = F.add(f.quad.at(i, i), f.quad.at(i, i));
            else
                f.gram.at(i, j) = F.add(f.quad.at(i, j), f.quad.at(j, i));
        }
}

void check_rank(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("rank out of range");
}

} // namespace

ClassicalForm make_symplectic(const Field& F, int n) {
    check_rank(n);
    ClassicalForm f = blank(FormKind::Symplectic, F, 2 * n, n);
    for (int i = 0; i < n; ++i) {
        f.gram.at(i, n + i) = 1;
        f.gram.at(n + i, i) = F.neg(1);
    }
    f.finalize();
    return f;
}

ClassicalForm make_parabolic(const Field& F, int n) {
    check_rank(n);
    ClassicalForm f = blank(FormKind::Parabolic, F, 2 * n + 1, n);
    f.quad.at(0, 0) = 1;
    for (int i = 1; i <= n; ++i) f.quad.at(i, n + i) = 1;
    polarize(f);
    f.finalize();
    return f;
}

ClassicalForm make_hyperbolic(const Field& F, int n) {
    check_rank(n);
    ClassicalForm f = blank(FormKind::Hyperbolic, F, 2 * n, n);
    for (int i = 0; i < n; ++i) f.quad.at(i, n + i) = 1;
    polarize(f);
    f.finalize();
    return f;
}

ClassicalForm make_elliptic(const Field& F, int n) {
    check_rank(n);
    ClassicalForm f = blank(FormKind::Elliptic, F, 2 * n + 2, n);
    for (int i = 0; i < n; ++i) f.quad.at(i, n + i) = 1;
    auto [t, d] = irreducible_quadratic(F);
    f.quad.at(2 * n, 2 * n) = 1;
    f.quad.at(2 * n, 2 * n + 1) = F.neg(t);
    f.quad.at(2 * n + 1, 2 * n + 1) = d;
    polarize(f);
    f.finalize();
    return f;
}

ClassicalForm make_hermitian(const Field& F, int n) {
    check_rank(n);
    if (F.k % 2 != 0) throw std::invalid_argument("hermitian forms need a field of square order");
    ClassicalForm f = blank(FormKind::Hermitian, F, 2 * n, n);
    f.sigma = F.k / 2;
    for (int l = 1; l <= n; ++l) {
        Elem s = (l % 2 == 0) ? Elem{1} : F.neg(1);
        f.gram.at(n - l, n + l - 1) = s;
        f.gram.at(n + l - 1, n - l) = s;
    }
    f.finalize();
    return f;
}

ClassicalForm make_form(FormKind kind, const Field& F, int n) {
    switch (kind) {
    case FormKind::Symplectic: return make_symplectic(F, n);
    case FormKind::Parabolic: return make_parabolic(F, n);
    case FormKind::Hyperbolic: return make_hyperbolic(F, n);
    case FormKind::Elliptic: return make_elliptic(F, n);
    case FormKind::Hermitian: return make_hermitian(F, n);
    }
    throw std::invalid_argument("form kind");
}

PolarSpace::PolarSpace(PolarSpace&&) noexcept = default;
PolarSpace& PolarSpace::operator=(PolarSpace&&) noexcept = default;

long PolarSpace::code(const Elem* v) const {
    long c = 0;
    for (int i = D - 1; i >= 0; --i) c = c * form.F.q + v[i];
    return c;
}

Elem PolarSpace::pair(int i, int j) const {
    if (!btab_.empty()) return btab_[static_cast<size_t>(i) * N + j];
    const Field& F = form.F;
    const Elem* x = point(i);
    const Elem* u = dual_.data() + static_cast<size_t>(j) * D;
    if (F.k == 1) {
        int acc = 0;
        for (int t = 0; t < D; ++t) acc += x[t] * u[t];
        return static_cast<Elem>(acc % F.p);
    }
    Elem acc = 0;
    for (int t = 0; t < D; ++t) acc = F.add(acc, F.mul(x[t], u[t]));
    return acc;
}

PolarSpace build_polar_space(const ClassicalForm& form, long budget) {
    PolarSpace P;
    P.form = form;
    P.form.finalize();
    P.n = form.rank;
    P.D = form.dim;
    const Field& F = P.form.F;
    const int q = F.q;
    long total = 1;
    for (int i = 0; i < P.D; ++i) {
        P.qpow_.push_back(total);
        total *= q;
        if (total > (1L << 24)) throw std::invalid_argument("ambient space too large");
    }
    P.code_index_.assign(total, -1);
    std::vector<Elem> v(P.D);
    for (long c = 1; c < total; ++c) {
        long r = c;
        int first = -1;
        for (int i = 0; i < P.D; ++i) {
            v[i] = static_cast<Elem>(r % q);
            r /= q;
            if (first < 0 && v[i]) first = i;
        }
        if (v[first] != 1 || !P.form.singular(v.data())) continue;
        if (P.N >= budget) throw std::invalid_argument("point budget exceeded");
        P.pts_.insert(P.pts_.end(), v.begin(), v.end());
        P.pivot_.push_back(first);
        ++P.N;
    }
    for (int i = 0; i < P.N; ++i) {
        const Elem* p = P.point(i);
        for (int l = 1; l < q; ++l) {
            for (int t = 0; t < P.D; ++t) v[t] = F.mul(static_cast<Elem>(l), p[t]);
            P.code_index_[P.code(v.data())] = i;
        }
    }
    P.dual_.assign(static_cast<size_t>(P.N) * P.D, 0);
    for (int i = 0; i < P.N; ++i) {
        const Elem* p = P.point(i);
        Elem* u = P.dual_.data() + static_cast<size_t>(i) * P.D;
        // b(x, p) = sum_a x_a G_ab sigma(p_b) = x . u
        for (const auto& t : P.form.gram_terms) {
            Elem pb = P.form.sigma ? F.frob(p[t.j], P.form.sigma) : p[t.j];
            u[t.i] = F.add(u[t.i], F.mul(t.c, pb));
        }
    }
    P.words = (P.N + 63) / 64;
    P.perp_.assign(static_cast<size_t>(P.N) * P.words, 0);
    bool table = P.N <= 4096;
    std::vector<Elem> tab;
    if (table) tab.assign(static_cast<size_t>(P.N) * P.N, 0);
    for (int i = 0; i < P.N; ++i)
        for (int j = 0; j < P.N; ++j) {
            Elem b = P.pair(i, j);
            if (table) tab[static_cast<size_t>(i) * P.N + j] = b;
            if (b == 0) set_bit(P.perp_.data() + static_cast<size_t>(i) * P.words, j);
        }
    if (table) P.btab_ = std::move(tab);
    P.thin = form.kind == FormKind::Hyperbolic;
    P.large = q >= 3;
    std::vector<std::vector<Elem>> unit;
    int offset = form.kind == FormKind::Parabolic ? 1 : 0;
    for (int i = 0; i < P.n; ++i) {
        std::vector<Elem> e(P.D, 0);
        e[offset + i] = 1;
        unit.push_back(e);
    }
    P.ref_.basis = P.canonical_basis(unit);
    P.levels_.resize(P.n);
    return P;
}

std::vector<int> PolarSpace::span_points(const int* basis, int k) const {
    const Field& F = form.F;
    const int q = F.q;
    std::vector<int> out;
    std::vector<Elem> coef(k), v(D);
    for (int lead = 0; lead < k; ++lead) {
        long combos = 1;
        for (int t = lead + 1; t < k; ++t) combos *= q;
        for (long c = 0; c < combos; ++c) {
            long r = c;
            std::fill(coef.begin(), coef.end(), 0);
            coef[lead] = 1;
            for (int t = lead + 1; t < k; ++t) {
                coef[t] = static_cast<Elem>(r % q);
                r /= q;
            }
            std::fill(v.begin(), v.end(), 0);
            for (int t = 0; t < k; ++t) {
                if (!coef[t]) continue;
                const Elem* p = point(basis[t]);
                for (int s = 0; s < D; ++s) v[s] = F.add(v[s], F.mul(coef[t], p[s]));
            }
            out.push_back(index_of(v.data()));
        }
    }
    return out;
}

std::vector<int> PolarSpace::canonical_basis(const std::vector<std::vector<Elem>>& vecs) const {
    const Field& F = form.F;
    std::vector<std::vector<Elem>> m = vecs;
    int rank = 0;
    for (int c = 0; c < D && rank < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        Elem iv = F.inv(m[rank][c]);
        for (auto& x : m[rank]) x = F.mul(x, iv);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || !m[r][c]) continue;
            Elem f = m[r][c];
            for (int t = 0; t < D; ++t) m[r][t] = F.sub(m[r][t], F.mul(f, m[rank][t]));
        }
        ++rank;
    }
    std::vector<int> out;
    for (int r = 0; r < rank; ++r) {
        int idx = index_of(m[r].data());
        if (idx < 0) throw std::invalid_argument("span is not a singular subspace");
        out.push_back(idx);
    }
    return out;
}

const SubspaceList& PolarSpace::subspaces(int d) const {
    if (d < 0 || d >= n) throw std::invalid_argument("subspace dimension out of range");
    std::lock_guard<std::mutex> lock(*mu_);
    if (levels_[d]) return *levels_[d];
    if (!levels_[0]) {
        auto L = std::make_unique<SubspaceList>();
        L->d = 0;
        L->k = 1;
        L->basis.resize(N);
        for (int i = 0; i < N; ++i) L->basis[i] = i;
        levels_[0] = std::move(L);
    }
    Bits acc(words);
    for (int lvl = 1; lvl <= d; ++lvl) {
        if (levels_[lvl]) continue;
        const SubspaceList& prev = *levels_[lvl - 1];
        auto L = std::make_unique<SubspaceList>();
        L->d = lvl;
        L->k = lvl + 1;
        for (size_t s = 0; s < prev.count(); ++s) {
            const std::int32_t* rows = prev.at(s);
            std::copy(perp(rows[0]), perp(rows[0]) + words, acc.begin());
            for (int r = 1; r < prev.k; ++r) {
                const std::uint64_t* pr = perp(rows[r]);
                for (int w = 0; w < words; ++w) acc[w] &= pr[w];
            }
            int last = pivot_[rows[prev.k - 1]];
            for (int w = 0; w < words; ++w) {
                std::uint64_t x = acc[w];
                while (x) {
                    int j = w * 64 + __builtin_ctzll(x);
                    x &= x - 1;
                    int c = pivot_[j];
                    if (c <= last) continue;
                    bool ok = true;
                    for (int r = 0; r < prev.k && ok; ++r) ok = point(rows[r])[c] == 0;
                    if (!ok) continue;
                    L->basis.insert(L->basis.end(), rows, rows + prev.k);
                    L->basis.push_back(j);
                }
            }
            if (L->basis.size() > (1u << 28)) throw std::runtime_error("subspace enumeration budget exceeded");
        }
        levels_[lvl] = std::move(L);
    }
    return *levels_[d];
}

const SubspaceList& enumerate_singular(const PolarSpace& P, int d) { return P.subspaces(d); }

bool opposite_bases(const PolarSpace& P, const int* x, const int* y, int k) {
    const Field& F = P.form.F;
    Elem g[8][8];
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) g[a][b] = P.pair(x[a], y[b]);
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = c; r < k; ++r)
            if (g[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        if (piv != c)
            for (int t = 0; t < k; ++t) std::swap(g[piv][t], g[c][t]);
        Elem iv = F.inv(g[c][c]);
        for (int r = c + 1; r < k; ++r) {
            if (!g[r][c]) continue;
            Elem f = F.mul(g[r][c], iv);
            for (int t = c; t < k; ++t) g[r][t] = F.sub(g[r][t], F.mul(f, g[c][t]));
        }
    }
    return true;
}

bool opposite(const PolarSpace& P, const SingularSubspace& X, const SingularSubspace& Y) {
    if (X.basis.size() != Y.basis.size() || X.basis.empty()) return false;
    return opposite_bases(P, X.basis.data(), Y.basis.data(), static_cast<int>(X.basis.size()));
}

int oriflamme_type(const PolarSpace& P, const SingularSubspace& M) {
    if (!P.thin) throw std::invalid_argument("oriflamme type needs a hyperbolic space");
    if (static_cast<int>(M.basis.size()) != P.n) throw std::invalid_argument("not a maximal subspace");
    const auto& R = P.reference_maximal().basis;
    std::vector<Elem> m;
    for (int i : M.basis) m.insert(m.end(), P.point(i), P.point(i) + P.D);
    for (int i : R) m.insert(m.end(), P.point(i), P.point(i) + P.D);
    int rk = rank_of(P.form.F, m, 2 * P.n, P.D);
    int meet = 2 * P.n - rk;
    return ((P.n - meet) % 2 == 0) ? P.n : P.n - 1;
}

bool is_subspace(const PolarSpace& P, const Bits& S) {
    std::vector<int> members;
    for (int i = 0; i < P.N; ++i)
        if (bit(S.data(), i)) members.push_back(i);
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b) {
            if (!P.collinear(members[a], members[b])) continue;
            int basis[2] = {members[a], members[b]};
            for (int x : P.span_points(basis, 2))
                if (!bit(S.data(), x)) return false;
        }
    return true;
}

CorankResult corank_of_subspace(const PolarSpace& P, const Bits& S) {
    CorankResult res;
    res.is_subspace = is_subspace(P, S);
    std::optional<SingularSubspace> last_disjoint;
    for (int t = 0; t < P.n; ++t) {
        const SubspaceList& L = P.subspaces(t);
        std::optional<SingularSubspace> disjoint;
        for (size_t s = 0; s < L.count() && !disjoint; ++s) {
            bool meets = false;
            for (int x : P.span_points(L.at(s), L.k))
                if (bit(S.data(), x)) {
                    meets = true;
                    break;
                }
            if (!meets) disjoint = SingularSubspace{std::vector<int>(L.at(s), L.at(s) + L.k)};
        }
        if (!disjoint) {
            res.t = t;
            res.witness = last_disjoint;
            return res;
        }
        last_disjoint = disjoint;
    }
    res.t = P.n;
    res.witness = last_disjoint;
    return res;
}

} // namespace polaris
