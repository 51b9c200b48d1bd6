#include "polaris/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace polaris {

std::vector<int> Diagram::nodes() const {
    std::vector<int> out;
    for (const auto& o : orbits) out.insert(out.end(), o.begin(), o.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Diagram make(Family f, int n, int i, int j, int t, std::vector<std::vector<int>> orbits, bool special = false) {
    Diagram d;
    d.family = f;
    d.n = n;
    d.i = i;
    d.j = j;
    d.t = t;
    d.orbits = std::move(orbits);
    d.special = special;
    return d;
}

std::vector<std::vector<int>> singletons(int from, int to, int step = 1) {
    std::vector<std::vector<int>> out;
    for (int v = from; v <= to; v += step) out.push_back({v});
    return out;
}

int d_twist(int n, int i, int j) { return ((n + i * j + 1) % 2 == 0) ? 2 : 1; }

} // namespace

std::vector<Diagram> catalog(Family f, int n) {
    build_root_system(f, n); // rank validation
    std::vector<Diagram> out;
    switch (f) {
    case Family::A:
        for (int i = 0; 2 * i <= n; ++i) {
            std::vector<std::vector<int>> orb;
            for (int k = 1; k <= i; ++k) orb.push_back({k, n + 1 - k});
            out.push_back(make(f, n, i, 1, 2, orb));
        }
        if (n % 2 == 1) out.push_back(make(f, n, (n - 1) / 2, 2, 1, singletons(2, n - 1, 2)));
        out.push_back(make(f, n, n, 1, 1, singletons(1, n)));
        break;
    case Family::B:
    case Family::C:
        for (int i = 0; i <= n; ++i) out.push_back(make(f, n, i, 1, 1, singletons(1, i)));
        for (int i = 1; 2 * i <= n; ++i) out.push_back(make(f, n, i, 2, 1, singletons(2, 2 * i, 2)));
        if (n == 2) out.push_back(make(f, n, 1, 1, 2, {{1, 2}}, true));
        break;
    case Family::D:
        for (int i = 0; i < n - 1; ++i) out.push_back(make(f, n, i, 1, d_twist(n, i, 1), singletons(1, i)));
        {
            auto orb = singletons(1, n - 2);
            orb.push_back({n - 1, n});
            out.push_back(make(f, n, n - 1, 1, 2, orb));
        }
        out.push_back(make(f, n, n, 1, 1, singletons(1, n)));
        if (n % 2 == 0) {
            for (int i = 1; 2 * i < n; ++i) out.push_back(make(f, n, i, 2, 1, singletons(2, 2 * i, 2)));
            auto orb = singletons(2, n - 2, 2);
            orb.push_back({n});
            out.push_back(make(f, n, n / 2, 2, 1, orb));
        } else {
            for (int i = 1; 2 * i < n - 1; ++i) out.push_back(make(f, n, i, 2, 2, singletons(2, 2 * i, 2)));
            auto orb = singletons(2, n - 3, 2);
            orb.push_back({n - 1, n});
            out.push_back(make(f, n, (n - 1) / 2, 2, 2, orb));
        }
        if (n == 4) {
            out.push_back(make(f, n, 1, 2, 3, {{1, 3, 4}}, true));
            out.push_back(make(f, n, 2, 1, 3, {{2}, {1, 3, 4}}, true));
        }
        break;
    }
    return out;
}

namespace {

struct State {
    std::vector<int> nodes;
    std::vector<std::vector<int>> orbits;
};

// Removable moves: (component polar type, orbit index, highest root).
std::vector<std::pair<size_t, const Root*>> moves(const RootSystem& rs, const State& s) {
    std::vector<std::pair<size_t, const Root*>> out;
    for (const auto& comp : rs.components(s.nodes)) {
        std::vector<int> pt = rs.polar_type_in(comp);
        for (size_t k = 0; k < s.orbits.size(); ++k) {
            std::vector<int> o = s.orbits[k];
            std::sort(o.begin(), o.end());
            if (o == pt) out.push_back({k, &rs.highest_in(comp)});
        }
    }
    return out;
}

State apply(const State& s, size_t k) {
    State r;
    const auto& o = s.orbits[k];
    for (int v : s.nodes)
        if (std::find(o.begin(), o.end(), v) == o.end()) r.nodes.push_back(v);
    for (size_t m = 0; m < s.orbits.size(); ++m)
        if (m != k) r.orbits.push_back(s.orbits[m]);
    return r;
}

State initial(const Diagram& d) {
    State s;
    for (int v = 1; v <= d.n; ++v) s.nodes.push_back(v);
    s.orbits = d.orbits;
    return s;
}

} // namespace

Extraction is_polar_closed(const Diagram& d) {
    RootSystem rs = build_root_system(d.family, d.n);
    Extraction ex;
    State s = initial(d);
    for (;;) {
        auto mv = moves(rs, s);
        if (mv.empty()) break;
        ex.steps.push_back(s.nodes);
        ex.roots.push_back(*mv.front().second);
        s = apply(s, mv.front().first);
    }
    ex.closed = s.orbits.empty();
    if (!ex.closed) {
        ex.stuck_nodes = s.nodes;
        ex.stuck_orbits = s.orbits;
    }
    return ex;
}

std::vector<std::vector<std::vector<int>>> all_extraction_root_sets(const Diagram& d) {
    RootSystem rs = build_root_system(d.family, d.n);
    std::set<std::vector<std::vector<int>>> results;
    std::function<void(const State&, std::vector<std::vector<int>>&)> rec =
        [&](const State& s, std::vector<std::vector<int>>& acc) {
            auto mv = moves(rs, s);
            if (mv.empty()) {
                if (s.orbits.empty()) {
                    auto sorted = acc;
                    std::sort(sorted.begin(), sorted.end());
                    results.insert(sorted);
                } else {
                    results.insert(std::vector<std::vector<int>>{std::vector<int>{-1}});
                }
                return;
            }
            for (const auto& m : mv) {
                acc.push_back(m.second->e);
                rec(apply(s, m.first), acc);
                acc.pop_back();
            }
        };
    std::vector<std::vector<int>> acc;
    rec(initial(d), acc);
    return {results.begin(), results.end()};
}

std::string format_symbol(const Diagram& d) {
    std::string s;
    if (d.t != 1) s += std::to_string(d.t);
    s += family_char(d.family);
    s += std::to_string(d.n) + ";" + std::to_string(d.i) + "^" + std::to_string(d.j);
    return s;
}

Diagram parse_symbol(const std::string& text) {
    size_t pos = 0;
    auto fail = [&](const std::string& why) -> Diagram {
        throw std::invalid_argument("malformed symbol '" + text + "': " + why);
    };
    auto number = [&](int& out) -> bool {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || pos - start > 3) return false;
        out = std::stoi(text.substr(start, pos - start));
        return true;
    };
    int t = 0;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        t = text[pos] - '0';
        ++pos;
        if (pos < text.size() && text[pos] == '^') ++pos;
    }
    if (pos >= text.size() || std::string("ABCD").find(text[pos]) == std::string::npos) return fail("family");
    Family f = family_from_char(text[pos++]);
    int n = 0, i = 0, j = 0;
    if (!number(n)) return fail("rank");
    if (pos >= text.size() || text[pos++] != ';') return fail("expected ';'");
    if (!number(i)) return fail("index");
    if (pos >= text.size() || text[pos++] != '^') return fail("expected '^'");
    if (!number(j)) return fail("spacing");
    if (pos != text.size()) return fail("trailing characters");
    std::vector<Diagram> cat;
    try {
        cat = catalog(f, n);
    } catch (const std::invalid_argument&) {
        return fail("rank out of range");
    }
    const Diagram* found = nullptr;
    for (const auto& d : cat) {
        if (d.i != i || d.j != j) continue;
        if (t != 0 && d.t != t) continue;
        if (!found || (found->special && !d.special)) found = &d;
    }
    if (!found) throw std::invalid_argument("symbol '" + text + "' is not in the catalog");
    return *found;
}

} // namespace polaris
