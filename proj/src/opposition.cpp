#include "polaris/opposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "polaris/chevalley.hpp"

namespace polaris {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv(const std::uint8_t* p, size_t n) {
    std::uint64_t h = 1469598103934665603ULL;
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

// 2n-1 or 2n with the reference maximal span(e_0..e_{n-1}) of type n
int maximal_class(const PolarSpace& P, const int* basis) {
    const int n = P.n;
    std::vector<Elem> m;
    m.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        const Elem* v = P.point(basis[r]);
        m.insert(m.end(), v + n, v + 2 * n);
    }
    int rk = rank_of(P.form.F, m, n, n);
    return rk % 2 == 0 ? n : n - 1;
}

template <class Pred>
bool search_list(const SubspaceList& L, const SearchOptions& opt, std::uint64_t salt, Pred&& stop) {
    const size_t c = L.count();
    if (opt.probes > 0 && static_cast<long>(c) > opt.probe_threshold) {
        std::mt19937_64 rng(opt.seed ^ salt);
        for (int t = 0; t < opt.probes; ++t)
            if (stop(L.at(rng() % c))) return true;
    }
    for (size_t i = 0; i < c; ++i)
        if (stop(L.at(i))) return true;
    return false;
}

std::vector<int> image_basis(const Collineation& th, const int* basis, int k) {
    std::vector<int> img(k);
    for (int i = 0; i < k; ++i) img[i] = th.perm[basis[i]];
    return img;
}

bool same_span(const PolarSpace& P, const int* a, const int* b, int k) {
    std::vector<std::vector<Elem>> va, vb;
    for (int i = 0; i < k; ++i) {
        va.emplace_back(P.point(a[i]), P.point(a[i]) + P.D);
        vb.emplace_back(P.point(b[i]), P.point(b[i]) + P.D);
    }
    return P.canonical_basis(va) == P.canonical_basis(vb);
}

bool canonical_fixed(const Collineation& th, const int* basis, int k) {
    const PolarSpace& P = *th.P;
    std::vector<std::vector<Elem>> v;
    for (int i = 0; i < k; ++i) {
        const Elem* x = P.point(th.perm[basis[i]]);
        v.emplace_back(x, x + P.D);
    }
    std::vector<int> c = P.canonical_basis(v);
    return std::equal(c.begin(), c.end(), basis);
}

const std::vector<Diagram>& cached_catalog(Family f, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Diagram>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(f), n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, catalog(f, n)).first;
    return it->second;
}

int fork_twist(const Collineation& th) {
    bool pi0 = th.P->n % 2 == 1;
    return pi0 != th.swaps_classes ? 2 : 1;
}

} // namespace

Collineation validate(const PolarSpace& P, const SemilinearMap& g, bool check_form) {
    const Field& F = P.form.F;
    if (g.M.n != P.D) throw std::invalid_argument("matrix dimension does not match the space");
    if (g.frob < 0 || g.frob >= F.k) throw std::invalid_argument("Frobenius exponent out of range");
    if (check_form && !preserves_form(P.form, g)) throw std::invalid_argument("map does not preserve the form up to a scalar");
    Collineation th;
    th.P = &P;
    th.g = g;
    th.perm.resize(P.N);
    std::vector<Elem> img(P.D);
    th.trivial = true;
    for (int p = 0; p < P.N; ++p) {
        apply(F, g, P.point(p), img.data());
        int j = P.index_of(img.data());
        if (j < 0) throw std::invalid_argument("map sends a singular point off the polar space");
        th.perm[p] = j;
        th.trivial &= j == p;
    }
    std::vector<std::uint8_t> bytes(g.M.a.begin(), g.M.a.end());
    bytes.push_back(static_cast<std::uint8_t>(g.frob));
    th.hash = fnv(bytes.data(), bytes.size());
    if (P.thin) {
        auto img_ref = image_basis(th, P.reference_maximal().basis.data(), P.n);
        th.swaps_classes = maximal_class(P, img_ref.data()) != P.n;
    }
    return th;
}

bool maps_opposite(const Collineation& th, const int* basis, int k) {
    int img[8];
    for (int i = 0; i < k; ++i) img[i] = th.perm[basis[i]];
    return opposite_bases(*th.P, basis, img, k);
}

std::optional<std::vector<int>> is_nondomestic_dim(const Collineation& th, int d, const SearchOptions& opt) {
    const PolarSpace& P = *th.P;
    if (d < 0 || d >= P.n) throw std::invalid_argument("dimension out of range");
    if (th.trivial) return std::nullopt;
    std::optional<std::vector<int>> out;
    const int k = d + 1;
    if (d == 0) {
        for (int p = 0; p < P.N; ++p)
            if (!P.collinear(p, th.perm[p])) return std::vector<int>{p};
        return std::nullopt;
    }
    search_list(P.subspaces(d), opt, splitmix(th.hash + d), [&](const std::int32_t* b) {
        if (!maps_opposite(th, b, k)) return false;
        out = std::vector<int>(b, b + k);
        return true;
    });
    return out;
}

std::vector<int> OppDiagramResult::nodes() const {
    std::vector<int> out;
    for (const auto& o : orbits) out.insert(out.end(), o.begin(), o.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string raw_descriptor(const OppDiagramResult& r) {
    std::ostringstream s;
    s << "uncapped:";
    if (r.twist != 1) s << r.twist;
    s << family_char(r.family) << r.n << "{";
    auto nodes = r.nodes();
    for (size_t i = 0; i < nodes.size(); ++i) s << (i ? "," : "") << nodes[i];
    s << "}";
    return s.str();
}

OppDiagramResult opposition_diagram(const Collineation& th, const SearchOptions& opt) {
    const PolarSpace& P = *th.P;
    const int n = P.n;
    OppDiagramResult r;
    r.family = P.form.family();
    r.n = n;
    auto record = [&](std::vector<int> orbit, std::vector<int> basis) {
        r.orbits.push_back(orbit);
        r.witnesses.push_back({std::move(orbit), std::move(basis)});
    };
    if (r.family == Family::D) {
        r.twist = fork_twist(th);
        for (int d = 0; d <= n - 3; ++d)
            if (auto w = is_nondomestic_dim(th, d, opt)) record({d + 1}, *w);
        if (r.twist == 2) {
            if (auto w = is_nondomestic_dim(th, n - 2, opt)) record({n - 1, n}, *w);
        } else if (!th.trivial) {
            bool found[2] = {false, false};
            search_list(P.subspaces(n - 1), opt, splitmix(th.hash + n), [&](const std::int32_t* b) {
                int c = maximal_class(P, b);
                int slot = c == n ? 1 : 0;
                if (found[slot] || !maps_opposite(th, b, n)) return false;
                found[slot] = true;
                record({c}, std::vector<int>(b, b + n));
                return found[0] && found[1];
            });
        }
    } else {
        for (int d = 0; d < n; ++d)
            if (auto w = is_nondomestic_dim(th, d, opt)) record({d + 1}, *w);
    }
    std::vector<size_t> order(r.orbits.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return r.orbits[a] < r.orbits[b]; });
    std::vector<std::vector<int>> orbs;
    std::vector<Witness> wit;
    for (size_t i : order) {
        orbs.push_back(r.orbits[i]);
        wit.push_back(r.witnesses[i]);
    }
    r.orbits = std::move(orbs);
    r.witnesses = std::move(wit);

    std::vector<int> raw = r.nodes();
    std::vector<int> swapped = raw;
    if (r.family == Family::D) {
        for (int& x : swapped)
            if (x >= n - 1) x = 2 * n - 1 - x;
        std::sort(swapped.begin(), swapped.end());
    }
    for (const Diagram& c : cached_catalog(r.family, n)) {
        if (c.special || c.t != r.twist) continue;
        auto cn = c.nodes();
        if (cn == raw || cn == swapped) {
            r.match = c;
            break;
        }
    }
    if (r.match) {
        r.symbol = format_symbol(*r.match);
        if (P.form.kind == FormKind::Symplectic && P.form.F.p == 2) {
            Diagram b = *r.match;
            b.family = Family::B;
            r.alias = format_symbol(b);
        }
    } else {
        r.symbol = raw_descriptor(r);
    }
    return r;
}

std::string class_name(CollineationClass c) {
    switch (c) {
    case CollineationClass::Identity: return "identity";
    case CollineationClass::I: return "I";
    case CollineationClass::II: return "II";
    case CollineationClass::III: return "III";
    case CollineationClass::NotDomestic: return "not-domestic";
    }
    return "?";
}

bool is_point_domestic(const Collineation& th) {
    for (int p = 0; p < th.P->N; ++p)
        if (!th.P->collinear(p, th.perm[p])) return false;
    return true;
}

long fixed_point_count(const Collineation& th) {
    long c = 0;
    for (int p = 0; p < th.P->N; ++p) c += th.perm[p] == p;
    return c;
}

std::optional<std::vector<std::vector<int>>> chamber_nondomestic(const Collineation& th) {
    const PolarSpace& P = *th.P;
    const int n = P.n;
    if (th.trivial) return std::nullopt;
    const bool dtype = P.form.family() == Family::D;
    const int twist = dtype ? fork_twist(th) : 1;
    const int W = P.words;
    std::vector<int> basis;
    std::vector<std::vector<int>> flag;

    auto candidates = [&](Bits& acc) {
        if (basis.empty()) {
            acc.assign(W, ~std::uint64_t{0});
            if (P.N % 64) acc[W - 1] = (std::uint64_t{1} << (P.N % 64)) - 1;
            return;
        }
        acc.assign(P.perp(basis[0]), P.perp(basis[0]) + W);
        for (size_t r = 1; r < basis.size(); ++r)
            for (int w = 0; w < W; ++w) acc[w] &= P.perp(basis[r])[w];
    };
    auto mark_span = [&](Bits& done, const std::vector<int>& b) {
        for (int x : P.span_points(b.data(), static_cast<int>(b.size()))) set_bit(done.data(), x);
    };

    std::function<bool()> dfs = [&]() -> bool {
        Bits acc, done(W, 0);
        candidates(acc);
        if (!basis.empty()) mark_span(done, basis);
        const int m = static_cast<int>(basis.size());
        for (int w = 0; w < W; ++w) {
            std::uint64_t x = acc[w] & ~done[w];
            while (x) {
                int qpt = w * 64 + __builtin_ctzll(x);
                x &= x - 1;
                if (bit(done.data(), qpt)) continue;
                basis.push_back(qpt);
                mark_span(done, basis);
                bool ok = false;
                if (dtype && m + 1 == n - 1) {
                    // the two maximals through this (n-2)-space
                    Bits acc2, done2(W, 0);
                    candidates(acc2);
                    mark_span(done2, basis);
                    std::vector<std::vector<int>> maxes;
                    for (int w2 = 0; w2 < W && maxes.size() < 2; ++w2) {
                        std::uint64_t y = acc2[w2];
                        while (y && maxes.size() < 2) {
                            int r = w2 * 64 + __builtin_ctzll(y);
                            y &= y - 1;
                            if (bit(done2.data(), r)) continue;
                            std::vector<int> M = basis;
                            M.push_back(r);
                            mark_span(done2, M);
                            maxes.push_back(M);
                        }
                    }
                    if (maxes.size() == 2) {
                        if (maximal_class(P, maxes[0].data()) != n - 1) std::swap(maxes[0], maxes[1]);
                        if (twist == 1) {
                            ok = maps_opposite(th, maxes[0].data(), n) && maps_opposite(th, maxes[1].data(), n);
                        } else {
                            auto i0 = image_basis(th, maxes[0].data(), n), i1 = image_basis(th, maxes[1].data(), n);
                            ok = opposite_bases(P, maxes[0].data(), i1.data(), n) && opposite_bases(P, maxes[1].data(), i0.data(), n);
                        }
                        if (ok) {
                            flag.push_back(basis);
                            flag.push_back(maxes[0]);
                            flag.push_back(maxes[1]);
                        }
                    }
                } else if (maps_opposite(th, basis.data(), m + 1)) {
                    if (m + 1 == n) {
                        ok = true;
                        flag.push_back(basis);
                    } else {
                        flag.push_back(basis);
                        ok = dfs();
                        if (!ok) flag.pop_back();
                    }
                }
                basis.pop_back();
                if (ok) return true;
            }
        }
        return false;
    };
    if (dfs()) return flag;
    return std::nullopt;
}

bool flags_opposite(const PolarSpace& P, const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        if (!opposite_bases(P, a[i].data(), b[i].data(), static_cast<int>(a[i].size()))) return false;
    }
    return true;
}

CollineationClass classify_class(const Collineation& th, const OppDiagramResult& diag) {
    if (th.trivial) return CollineationClass::Identity;
    auto nodes = diag.nodes();
    if (!std::binary_search(nodes.begin(), nodes.end(), 1))
        return fixed_point_count(th) ? CollineationClass::II : CollineationClass::III;
    if (!diag.full()) return CollineationClass::I;
    return chamber_nondomestic(th) ? CollineationClass::NotDomestic : CollineationClass::I;
}

CollineationClass classify_class(const Collineation& th) { return classify_class(th, opposition_diagram(th)); }

bool is_fixed(const Collineation& th, const int* basis, int k) {
    auto img = image_basis(th, basis, k);
    return same_span(*th.P, basis, img.data(), k);
}

std::vector<std::vector<int>> fixed_subspaces(const Collineation& th, int d) {
    const SubspaceList& L = th.P->subspaces(d);
    std::vector<std::vector<int>> out;
    for (size_t s = 0; s < L.count(); ++s)
        if (canonical_fixed(th, L.at(s), L.k)) out.emplace_back(L.at(s), L.at(s) + L.k);
    return out;
}

namespace {

int eigen_corank(const Collineation& th, const Bits& fixed) {
    const PolarSpace& P = *th.P;
    const Field& F = P.form.F;
    std::map<Elem, Bits> groups;
    std::vector<Elem> img(P.D);
    for (int p = 0; p < P.N; ++p) {
        if (!bit(fixed.data(), p)) continue;
        Elem lam = 0;
        if (th.g.frob == 0) {
            mat_vec(F, th.g.M, P.point(p), img.data());
            lam = img[P.pivot(p)];
        }
        auto& b = groups[lam];
        if (b.empty()) b.assign(P.words, 0);
        set_bit(b.data(), p);
    }
    int best = -1;
    for (const auto& [lam, b] : groups) {
        CorankResult c = corank_of_subspace(P, b);
        if (!c.is_subspace) continue;
        if (best < 0 || c.t < best) best = c.t;
    }
    return best;
}

} // namespace

FixedStructure fixed_structure(const Collineation& th, bool with_lines) {
    const PolarSpace& P = *th.P;
    FixedStructure fs;
    fs.points.assign(P.words, 0);
    for (int p = 0; p < P.N; ++p)
        if (th.perm[p] == p) {
            set_bit(fs.points.data(), p);
            ++fs.point_count;
        }
    if (with_lines && P.n >= 2) fs.lines = fixed_subspaces(th, 1);
    if (fs.point_count) {
        CorankResult c = corank_of_subspace(P, fs.points);
        fs.subspace = c.is_subspace;
        if (c.is_subspace) fs.corank = c.t;
        fs.eigen_corank = eigen_corank(th, fs.points);
    }
    return fs;
}

int corank_of_fixed_set(const Collineation& th) {
    const PolarSpace& P = *th.P;
    Bits fixed(P.words, 0);
    bool any = false;
    for (int p = 0; p < P.N; ++p)
        if (th.perm[p] == p) {
            set_bit(fixed.data(), p);
            any = true;
        }
    return any ? eigen_corank(th, fixed) : -1;
}

bool is_central_elation(const Collineation& th) {
    if (th.trivial) return false;
    const PolarSpace& P = *th.P;
    Bits fixed(P.words, 0);
    for (int p = 0; p < P.N; ++p)
        if (th.perm[p] == p) set_bit(fixed.data(), p);
    for (int p = 0; p < P.N; ++p) {
        if (th.perm[p] != p) continue;
        const std::uint64_t* pp = P.perp(p);
        bool all = true;
        for (int w = 0; w < P.words && all; ++w) all = (pp[w] & ~fixed[w]) == 0;
        if (all) return true;
    }
    return false;
}

bool is_axial(const Collineation& th) {
    if (th.trivial) return false;
    const PolarSpace& P = *th.P;
    for (const auto& L : fixed_subspaces(th, 1)) {
        auto pts = P.span_points(L.data(), 2);
        Bits onL(P.words, 0);
        for (int x : pts) set_bit(onL.data(), x);
        bool ok = true;
        for (int x : pts) {
            for (int y = 0; y < P.N && ok; ++y) {
                if (!P.collinear(x, y) || bit(onL.data(), y)) continue;
                int b[2] = {x, y};
                ok = is_fixed(th, b, 2);
            }
            if (!ok) break;
        }
        if (ok) return true;
    }
    return false;
}

bool is_homology_pattern(const Collineation& th, int a, int b) {
    const Field& F = th.P->form.F;
    if (th.g.frob != 0 || F.p == 2) return false;
    const Mat& M = th.g.M;
    const int D = M.n;
    for (int c = 1; c < F.q; ++c) {
        Mat N = mat_scale(F, M, static_cast<Elem>(c));
        if (!(mat_mul(F, N, N) == Mat::identity(D))) continue;
        Mat plus = N, minus = N;
        for (int i = 0; i < D; ++i) {
            plus.at(i, i) = F.sub(plus.at(i, i), 1);
            minus.at(i, i) = F.add(minus.at(i, i), 1);
        }
        int ea = D - rank_of(F, plus.a, D, D), eb = D - rank_of(F, minus.a, D, D);
        if (ea == a && eb == b) return true;
    }
    return false;
}

bool pdlinefixed(const Collineation& th) {
    const PolarSpace& P = *th.P;
    std::vector<Elem> m(3 * static_cast<size_t>(P.D));
    for (int p = 0; p < P.N; ++p) {
        int a = th.perm[p];
        if (a == p) continue;
        int b = th.perm[a];
        std::copy(P.point(p), P.point(p) + P.D, m.begin());
        std::copy(P.point(a), P.point(a) + P.D, m.begin() + P.D);
        std::copy(P.point(b), P.point(b) + P.D, m.begin() + 2 * P.D);
        if (rank_of(P.form.F, m, 3, P.D) > 2) return false;
    }
    return true;
}

DerivedGeometry fixed_line_geometry(const Collineation& th) {
    const PolarSpace& P = *th.P;
    DerivedGeometry g;
    auto lines = fixed_subspaces(th, 1);
    g.points = static_cast<long>(lines.size());
    g.rank = g.points ? 1 : 0;
    std::vector<std::vector<int>> solids;
    if (P.n >= 4) {
        solids = fixed_subspaces(th, 3);
        g.lines = static_cast<long>(solids.size());
        if (!solids.empty()) g.rank = 2;
        for (int d = 5; d < P.n; d += 2) {
            if (fixed_subspaces(th, d).empty()) break;
            g.rank = (d + 1) / 2;
        }
    }
    auto perp_lines = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b)
                if (!P.collinear(x, y)) return false;
        return true;
    };
    g.one_or_all = true;
    for (const auto& S : solids) {
        Bits in(P.words, 0);
        for (int x : P.span_points(S.data(), 4)) set_bit(in.data(), x);
        std::vector<size_t> inside;
        for (size_t l = 0; l < lines.size(); ++l)
            if (bit(in.data(), lines[l][0]) && bit(in.data(), lines[l][1])) inside.push_back(l);
        for (size_t l = 0; l < lines.size() && g.one_or_all; ++l) {
            if (bit(in.data(), lines[l][0]) && bit(in.data(), lines[l][1])) continue;
            size_t cnt = 0;
            for (size_t m : inside) cnt += perp_lines(lines[l], lines[m]);
            if (cnt != 1 && cnt != inside.size()) g.one_or_all = false;
        }
    }
    return g;
}

SemilinearMap GroupClosure::at(size_t i) const {
    SemilinearMap g{Mat(D), 0};
    const std::uint8_t* p = arena.data() + i * stride;
    std::copy(p, p + static_cast<size_t>(D) * D, g.M.a.begin());
    g.frob = p[static_cast<size_t>(D) * D];
    return g;
}

GroupClosure enumerate_group(const Field& F, const std::vector<SemilinearMap>& gens, size_t budget) {
    GroupClosure G;
    G.D = gens.empty() ? 1 : gens[0].M.n;
    for (const auto& g : gens)
        if (g.M.n != G.D) throw std::invalid_argument("generators of different dimensions");
    G.stride = static_cast<size_t>(G.D) * G.D + 1;
    std::vector<std::uint32_t> table(1u << 12, UINT32_MAX);
    auto key = [&](size_t i) { return fnv(G.arena.data() + i * G.stride, G.stride); };
    auto rehash = [&]() {
        std::vector<std::uint32_t> t(table.size() * 2, UINT32_MAX);
        size_t mask = t.size() - 1;
        for (size_t i = 0; i < G.size(); ++i) {
            size_t h = key(i) & mask;
            while (t[h] != UINT32_MAX) h = (h + 1) & mask;
            t[h] = static_cast<std::uint32_t>(i);
        }
        table.swap(t);
    };
    std::vector<std::uint8_t> buf(G.stride);
    // inserts buf when new
    auto insert = [&]() {
        size_t mask = table.size() - 1;
        size_t h = fnv(buf.data(), G.stride) & mask;
        while (table[h] != UINT32_MAX) {
            if (std::equal(buf.begin(), buf.end(), G.arena.begin() + table[h] * G.stride)) return false;
            h = (h + 1) & mask;
        }
        table[h] = static_cast<std::uint32_t>(G.size());
        G.arena.insert(G.arena.end(), buf.begin(), buf.end());
        if (G.size() * 2 > table.size()) rehash();
        return true;
    };
    auto store = [&](const SemilinearMap& g) {
        std::copy(g.M.a.begin(), g.M.a.end(), buf.begin());
        buf.back() = static_cast<std::uint8_t>(g.frob);
    };
    store(SemilinearMap{Mat::identity(G.D), 0});
    insert();
    for (size_t head = 0; head < G.size(); ++head) {
        SemilinearMap cur = G.at(head);
        for (const auto& g : gens) {
            store(compose(F, cur, g));
            if (insert() && G.size() > budget) {
                G.arena.resize(budget * G.stride);
                G.complete = false;
                return G;
            }
        }
    }
    return G;
}

bool is_scalar_map(const SemilinearMap& g) { return g.frob == 0 && scalar_of(g.M) != 0; }

bool is_unipotent(const Field& F, const SemilinearMap& g) {
    if (g.frob != 0) return false;
    SemilinearMap h = g;
    long pm = 1;
    while (pm < g.M.n) {
        h = power(F, h, F.p);
        pm *= F.p;
    }
    if (pm == 1) h = power(F, h, F.p);
    return h.M == Mat::identity(g.M.n);
}

} // namespace polaris
