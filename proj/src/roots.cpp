#include "polaris/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polaris {

char family_char(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    }
    return '?';
}

Family family_from_char(char c) {
    switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    }
    throw std::invalid_argument(std::string("unknown family ") + c);
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<int> RootSystem::to_simple(const std::vector<int>& e) const {
    std::vector<int> S(dim, 0);
    int acc = 0;
    for (int i = 0; i < dim; ++i) {
        acc += e[i];
        S[i] = acc;
    }
    std::vector<int> k(n, 0);
    switch (family) {
    case Family::A:
    case Family::B:
        for (int i = 0; i < n; ++i) k[i] = S[i];
        break;
    case Family::C:
        for (int i = 0; i < n - 1; ++i) k[i] = S[i];
        k[n - 1] = S[n - 1] / 2;
        break;
    case Family::D:
        for (int i = 0; i < n - 2; ++i) k[i] = S[i];
        k[n - 1] = S[n - 1] / 2;
        k[n - 2] = (S[n - 2] - e[n - 1]) / 2;
        break;
    }
    return k;
}

bool RootSystem::adjacent(int a, int b) const {
    return a != b && dot(simple[a - 1], simple[b - 1]) != 0;
}

bool RootSystem::is_root(const std::vector<int>& e) const {
    for (const auto& r : positive) {
        if (r.e == e) return true;
        bool neg = true;
        for (int i = 0; i < dim && neg; ++i) neg = (r.e[i] == -e[i]);
        if (neg) return true;
    }
    return false;
}

const Root& RootSystem::highest_in(const std::vector<int>& nodes) const {
    std::vector<bool> in(n + 1, false);
    for (int v : nodes) in[v] = true;
    const Root* best = nullptr;
    for (const auto& r : positive) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = (r.c[i] == 0 || in[i + 1]);
        if (ok && (!best || r.height > best->height)) best = &r;
    }
    if (!best) throw std::invalid_argument("empty node set");
    return *best;
}

std::vector<int> RootSystem::polar_type_in(const std::vector<int>& nodes) const {
    const Root& phi = highest_in(nodes);
    std::vector<int> out;
    for (int v : nodes)
        if (dot(simple[v - 1], phi.e) != 0) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> RootSystem::components(const std::vector<int>& nodes) const {
    std::vector<int> rest(nodes);
    std::sort(rest.begin(), rest.end());
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n + 1, false);
    for (int s : rest) {
        if (seen[s]) continue;
        std::vector<int> comp{s}, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : rest)
                if (!seen[w] && adjacent(v, w)) {
                    seen[w] = true;
                    comp.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    return comps;
}

RootSystem build_root_system(Family f, int n) {
    if (n < 2 || (f == Family::D && n < 4)) throw std::invalid_argument("rank out of range");
    if (n > 16) throw std::invalid_argument("rank out of range");
    RootSystem rs;
    rs.family = f;
    rs.n = n;
    rs.dim = (f == Family::A) ? n + 1 : n;
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(rs.dim, 0);
        if (i < n - 1 || f == Family::A) {
            a[i] = 1;
            a[i + 1] = -1;
        } else if (f == Family::B) {
            a[i] = 1;
        } else if (f == Family::C) {
            a[i] = 2;
        } else {
            a[i - 1] = 1;
            a[i] = 1;
        }
        rs.simple.push_back(a);
    }
    // closure of the simple roots under the simple reflections
    std::set<std::vector<int>> roots(rs.simple.begin(), rs.simple.end());
    std::vector<std::vector<int>> frontier(rs.simple.begin(), rs.simple.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& v : frontier) {
            for (const auto& a : rs.simple) {
                int num = 2 * dot(v, a), den = dot(a, a);
                std::vector<int> w(v);
                for (int t = 0; t < rs.dim; ++t) w[t] -= num / den * a[t];
                if (roots.insert(w).second) next.push_back(w);
            }
        }
        frontier.swap(next);
    }
    for (const auto& v : roots) {
        std::vector<int> k = rs.to_simple(v);
        if (std::all_of(k.begin(), k.end(), [](int x) { return x >= 0; })) {
            Root r;
            r.e = v;
            r.c = k;
            for (int x : k) r.height += x;
            rs.positive.push_back(r);
        }
    }
    std::sort(rs.positive.begin(), rs.positive.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.c > b.c;
    });
    rs.highest = rs.positive.back();
    return rs;
}

std::vector<int> polar_type(const RootSystem& rs) {
    std::vector<int> all(rs.n);
    for (int i = 0; i < rs.n; ++i) all[i] = i + 1;
    return rs.polar_type_in(all);
}

std::vector<int> opposition_involution(const RootSystem& rs) {
    std::vector<int> perm(rs.n);
    for (int i = 0; i < rs.n; ++i) perm[i] = i + 1;
    if (rs.family == Family::A) {
        for (int i = 0; i < rs.n; ++i) perm[i] = rs.n - i;
    } else if (rs.family == Family::D && rs.n % 2 == 1) {
        std::swap(perm[rs.n - 2], perm[rs.n - 1]);
    }
    return perm;
}

} // namespace polaris
