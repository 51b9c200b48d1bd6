#include "polaris/sweep.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include <omp.h>

namespace polaris {

void Census::merge(const Census& o) {
    elements += o.elements;
    nontrivial += o.nontrivial;
    for (const auto& [k, v] : o.symbols) symbols[k] += v;
    for (const auto& [k, v] : o.classes) classes[k] += v;
    for (const auto& [k, v] : o.uncapped) uncapped[k] += v;
    for (const auto& [k, v] : o.first_index) {
        auto it = first_index.find(k);
        if (it == first_index.end() || v < it->second) first_index[k] = v;
    }
    for (const auto& [k, v] : o.invariants) {
        InvariantTally& t = invariants[k];
        t.checked += v.checked;
        t.violations += v.violations;
        if (v.first_violation >= 0 && (t.first_violation < 0 || v.first_violation < t.first_violation))
            t.first_violation = v.first_violation;
    }
}

bool Census::ok() const {
    return std::all_of(invariants.begin(), invariants.end(), [](const auto& kv) { return kv.second.violations == 0; });
}

bool Census::operator==(const Census& o) const {
    auto same_inv = [&]() {
        if (invariants.size() != o.invariants.size()) return false;
        for (const auto& [k, v] : invariants) {
            auto it = o.invariants.find(k);
            if (it == o.invariants.end()) return false;
            const auto& w = it->second;
            if (v.checked != w.checked || v.violations != w.violations || v.first_violation != w.first_violation) return false;
        }
        return true;
    };
    return elements == o.elements && nontrivial == o.nontrivial && symbols == o.symbols && classes == o.classes &&
           uncapped == o.uncapped && first_index == o.first_index && same_inv();
}

std::vector<std::string> invariant_names(const PolarSpace& P) {
    std::vector<std::string> v{"nonempty", "pdlinefixed"};
    if (P.large) {
        v.push_back("capped");
        v.push_back("class1-corank");
        v.push_back("class3-shape");
    }
    if (P.form.F.p != 2) {
        v.push_back("unipotent-closed");
        if (P.form.kind == FormKind::Symplectic) v.push_back("homology");
    }
    return v;
}

void analyse_element(const PolarSpace& P, const SemilinearMap& g, long index, const SearchOptions& opt, Census& c) {
    const Field& F = P.form.F;
    Collineation th = validate(P, g, false);
    ++c.elements;
    OppDiagramResult r = opposition_diagram(th, opt);
    ++c.symbols[r.symbol];
    auto fi = c.first_index.find(r.symbol);
    if (fi == c.first_index.end() || index < fi->second) c.first_index[r.symbol] = index;
    if (!r.capped()) ++c.uncapped[raw_descriptor(r)];
    CollineationClass cls = classify_class(th, r);
    ++c.classes[class_name(cls)];
    if (!th.trivial) ++c.nontrivial;

    auto tally = [&](const char* name, bool holds) {
        InvariantTally& t = c.invariants[name];
        ++t.checked;
        if (!holds) {
            ++t.violations;
            if (t.first_violation < 0 || index < t.first_violation) t.first_violation = index;
        }
    };
    if (!th.trivial) tally("nonempty", !r.empty());
    if (cls == CollineationClass::II || cls == CollineationClass::III) tally("pdlinefixed", pdlinefixed(th));
    if (P.large) {
        tally("capped", r.capped());
        if (cls == CollineationClass::I)
            tally("class1-corank", r.capped() && r.match->j == 1 && corank_of_fixed_set(th) == r.match->i);
        if (cls == CollineationClass::III)
            tally("class3-shape", r.capped() && P.n % 2 == 0 && r.match->j == 2 && r.match->i == P.n / 2);
    }
    if (F.p != 2) {
        if (!th.trivial && is_unipotent(F, g)) tally("unipotent-closed", r.capped() && is_polar_closed(*r.match).closed);
        if (P.form.kind == FormKind::Symplectic && r.capped() && r.match->i == 1 && r.match->j == 2 && fixed_point_count(th) > 0)
            tally("homology", is_homology_pattern(th, P.D - 2, 2));
    }
}

namespace {

Census run(const PolarSpace& P, long count, const std::function<SemilinearMap(long)>& get, const SweepOptions& opt) {
    for (int d = 1; d < P.n; ++d) P.subspaces(d);
    if (opt.serial) {
        Census c;
        for (long i = 0; i < count; ++i) analyse_element(P, get(i), i, opt.search, c);
        return c;
    }
    int T = opt.threads > 0 ? opt.threads : omp_get_max_threads();
    std::vector<Census> parts(T);
#pragma omp parallel for num_threads(T) schedule(dynamic, 64)
    for (long i = 0; i < count; ++i) analyse_element(P, get(i), i, opt.search, parts[omp_get_thread_num()]);
    Census c;
    for (const auto& p : parts) c.merge(p);
    return c;
}

} // namespace

Census sweep_closure(const PolarSpace& P, const GroupClosure& G, const SweepOptions& opt) {
    return run(P, static_cast<long>(G.size()), [&](long i) { return G.at(static_cast<size_t>(i)); }, opt);
}

Census sweep_elements(const PolarSpace& P, const std::vector<SemilinearMap>& elems, const SweepOptions& opt) {
    return run(P, static_cast<long>(elems.size()), [&](long i) { return elems[static_cast<size_t>(i)]; }, opt);
}

std::vector<SemilinearMap> random_elements(const Field& F, const std::vector<SemilinearMap>& gens, long count, std::uint64_t seed, int length) {
    std::mt19937_64 rng(seed);
    std::vector<SemilinearMap> out;
    out.reserve(count);
    const int D = gens.at(0).M.n;
    for (long i = 0; i < count; ++i) {
        SemilinearMap g{Mat::identity(D), 0};
        for (int t = 0; t < length; ++t) {
            const auto& h = gens[rng() % gens.size()];
            g = compose(F, g, power(F, h, static_cast<long>(rng() % F.p) + 1));
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace polaris
