#include "polaris/io.hpp"

#include <fstream>
#include <sstream>

namespace polaris {

json field_json(const Field& F) { return json{{"p", F.p}, {"k", F.k}, {"modulus", F.modulus}}; }

Field field_from_json(const json& j) {
    try {
        int p = j.at("p").get<int>();
        int k = j.value("k", 1);
        if (!is_prime(p) || k < 1) throw InputError("field needs a prime p and k >= 1");
        Field F = field_make(p, k);
        if (j.contains("modulus") && j.at("modulus").get<std::vector<int>>() != F.modulus)
            throw InputError("only the canonical modulus of GF(" + std::to_string(F.q) + ") is supported");
        return F;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad field descriptor: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json elem_json(const Field& F, Elem a) { return F.coeffs(a); }

Elem elem_from_json(const Field& F, const json& j) {
    if (j.is_number_integer()) {
        long v = j.get<long>();
        if (v < 0 || v >= F.q) throw InputError("field element out of range");
        return static_cast<Elem>(v);
    }
    if (!j.is_array() || static_cast<int>(j.size()) > F.k) throw InputError("field element must be a coefficient array of length <= k");
    std::vector<int> c = j.get<std::vector<int>>();
    for (int x : c)
        if (x < 0 || x >= F.p) throw InputError("coefficient out of range");
    c.resize(F.k, 0);
    return F.from_coeffs(c);
}

namespace {

json mat_entries(const Field& F, const Mat& M) {
    json rows = json::array();
    for (int r = 0; r < M.n; ++r) {
        json row = json::array();
        for (int c = 0; c < M.n; ++c) row.push_back(elem_json(F, M.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_entries(const Field& F, const json& rows, int D) {
    if (!rows.is_array()) throw InputError("entries must be an array");
    Mat M(D);
    // a flat row-major list of D*D elements, or D rows of D elements
    if (D > 1 && static_cast<int>(rows.size()) == D * D) {
        for (int i = 0; i < D * D; ++i) M.a[i] = elem_from_json(F, rows[i]);
        return M;
    }
    if (static_cast<int>(rows.size()) != D) throw InputError("matrix must have " + std::to_string(D) + " rows");
    for (int r = 0; r < D; ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != D) throw InputError("matrix row has the wrong length");
        for (int c = 0; c < D; ++c) M.at(r, c) = elem_from_json(F, rows[r][c]);
    }
    return M;
}

} // namespace

json space_json(const ClassicalForm& form) {
    json j{{"kind", kind_name(form.kind)}, {"p", form.F.p}, {"k", form.F.k}, {"rank", form.rank}};
    json co{{"modulus", form.F.modulus}, {"sigma", form.sigma}, {"gram", mat_entries(form.F, form.gram)}};
    if (form.orthogonal()) co["quad"] = mat_entries(form.F, form.quad);
    j["coefficients"] = co;
    return j;
}

ClassicalForm space_from_json(const json& j) {
    try {
        FormKind kind = kind_from_name(j.at("kind").get<std::string>());
        json fj{{"p", j.at("p")}, {"k", j.value("k", 1)}};
        if (j.contains("coefficients") && j["coefficients"].contains("modulus")) fj["modulus"] = j["coefficients"]["modulus"];
        Field F = field_from_json(fj);
        int n = j.at("rank").get<int>();
        ClassicalForm form = make_form(kind, F, n);
        if (j.contains("coefficients")) {
            const json& co = j["coefficients"];
            if (co.contains("gram") && !(mat_from_entries(F, co["gram"], form.dim) == form.gram))
                throw InputError("only the standard form of each kind is supported (gram mismatch)");
            if (co.contains("quad") && form.orthogonal() && !(mat_from_entries(F, co["quad"], form.dim) == form.quad))
                throw InputError("only the standard form of each kind is supported (quadratic form mismatch)");
        }
        return form;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad space descriptor: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json matrix_json(const ClassicalForm& form, const SemilinearMap& g) {
    return json{{"field", field_json(form.F)},
                {"n", form.rank},
                {"kind", kind_name(form.kind)},
                {"frobenius_exp", g.frob},
                {"entries", mat_entries(form.F, g.M)}};
}

MatrixFile matrix_from_json(const json& j) {
    try {
        Field F = field_from_json(j.at("field"));
        FormKind kind = kind_from_name(j.at("kind").get<std::string>());
        int n = j.at("n").get<int>();
        MatrixFile out{make_form(kind, F, n), {}};
        out.g.frob = j.value("frobenius_exp", 0);
        out.g.M = mat_from_entries(F, j.at("entries"), out.form.dim);
        return out;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad matrix file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

json diagram_json(const PolarSpace& P, const OppDiagramResult& r) {
    json j{{"symbol", r.symbol}, {"capped", r.capped()}, {"twist", r.twist}, {"family", std::string(1, family_char(r.family))},
           {"rank", r.n}, {"orbits", r.orbits}};
    if (!r.alias.empty()) j["alias"] = r.alias;
    if (!r.capped()) j["raw"] = raw_descriptor(r);
    json w = json::array();
    for (const auto& x : r.witnesses) {
        json basis = json::array();
        for (int p : x.basis) {
            json v = json::array();
            for (int t = 0; t < P.D; ++t) v.push_back(elem_json(P.form.F, P.point(p)[t]));
            basis.push_back(v);
        }
        w.push_back(json{{"orbit", x.orbit}, {"basis", basis}});
    }
    j["witnesses"] = w;
    return j;
}

json census_json(const Census& c) {
    json inv = json::object();
    for (const auto& [k, t] : c.invariants)
        inv[k] = json{{"checked", t.checked}, {"violations", t.violations}, {"first_violation", t.first_violation}};
    return json{{"elements", c.elements},        {"nontrivial", c.nontrivial}, {"symbols", c.symbols},
                {"classes", c.classes},          {"uncapped", c.uncapped},     {"first_index", c.first_index},
                {"invariants", inv},             {"ok", c.ok()}};
}

std::string census_csv(const Census& c) {
    std::ostringstream s;
    s << "kind,key,count\n";
    for (const auto& [k, v] : c.symbols) s << "symbol," << k << "," << v << "\n";
    for (const auto& [k, v] : c.classes) s << "class," << k << "," << v << "\n";
    for (const auto& [k, v] : c.uncapped) s << "uncapped," << k << "," << v << "\n";
    for (const auto& [k, t] : c.invariants) s << "violations," << k << "," << t.violations << "\n";
    return s.str();
}

std::uint64_t content_hash(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream s;
    s << std::hex;
    s.width(16);
    s.fill('0');
    s << v;
    return s.str();
}

} // namespace polaris
