#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "polaris/chevalley.hpp"
#include "polaris/io.hpp"
#include "polaris/suites.hpp"
#include "polaris/sweep.hpp"

using namespace polaris;

namespace {

enum Exit { Pass = 0, Violation = 1, BadInput = 2 };

struct Options {
    int threads = 0;
    std::string config;
    bool no_cache = false;

    // sweep
    bool sp = false;
    std::string kind = "symplectic";
    int q = 3;
    int rank = 2;
    bool exhaustive = false;
    long random = 0;
    std::uint64_t seed = 0x5eed;
    long budget = 2000000;
    int probes = 512;
    std::string out, csv;

    // catalog
    std::string family;
    int n = 0;
    bool closed_only = false;

    // oppdiagram
    std::vector<std::string> files;

    // construct
    std::string name;
    int index = 1;
    std::string symbol;
};

Family family_of_kind(FormKind k) {
    switch (k) {
    case FormKind::Symplectic: return Family::C;
    case FormKind::Parabolic: return Family::B;
    case FormKind::Hyperbolic: return Family::D;
    default: throw InputError("no Chevalley generators for kind " + kind_name(k));
    }
}

// values from --config fill every option not given on the command line
void apply_config(CLI::App& app, const std::string& path) {
    json cfg = read_json_file(path);
    if (!cfg.is_object()) throw InputError("config must be a JSON object");
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        CLI::App* sub = &app;
        for (CLI::App* s : app.get_subcommands())
            if (s->parsed()) sub = s;
        CLI::Option* opt = nullptr;
        try {
            opt = sub->get_option("--" + it.key());
        } catch (const CLI::OptionNotFound&) {
            try {
                opt = app.get_option("--" + it.key());
            } catch (const CLI::OptionNotFound&) {
                throw InputError("unknown config key '" + it.key() + "'");
            }
        }
        if (opt->count() > 0) continue;
        std::string v;
        if (it->is_string())
            v = it->get<std::string>();
        else if (it->is_boolean())
            v = it->get<bool>() ? "true" : "false";
        else
            v = it->dump();
        opt->add_result(v);
        opt->run_callback();
    }
}

std::string cache_path(const json& spec) {
    return "polaris-cache/" + hex64(content_hash(spec.dump())) + ".json";
}

bool load_cached(const Options& o, const json& spec, json& report) {
    if (o.no_cache) return false;
    std::string p = cache_path(spec);
    if (!std::filesystem::exists(p)) return false;
    report = read_json_file(p);
    return report.value("spec", json()) == spec;
}

void store_cached(const Options& o, const json& spec, const json& report) {
    if (o.no_cache) return;
    std::error_code ec;
    std::filesystem::create_directories("polaris-cache", ec);
    if (!ec) write_text_file(cache_path(spec), report.dump(1) + "\n");
}

int cmd_catalog(const Options& o) {
    if (o.family.size() != 1) throw InputError("family must be one of A B C D");
    Family f;
    try {
        f = family_from_char(o.family[0]);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (o.n < 1 || o.n > 12) throw InputError("rank out of range");
    for (const Diagram& d : catalog(f, o.n)) {
        bool closed = !d.special && is_polar_closed(d).closed;
        if (o.closed_only && !closed) continue;
        std::printf("%-14s %s\n", format_symbol(d).c_str(), d.special ? "out-of-engine" : closed ? "closed" : "not-closed");
    }
    return Pass;
}

int cmd_oppdiagram(const Options& o) {
    if (o.files.empty() || o.files.size() > 2) throw InputError("expected [space-file] matrix-file");
    MatrixFile mf = matrix_from_json(read_json_file(o.files.back()));
    if (o.files.size() == 2) {
        ClassicalForm form = space_from_json(read_json_file(o.files.front()));
        if (form.kind != mf.form.kind || form.rank != mf.form.rank || form.F.q != mf.form.F.q)
            throw InputError("matrix file does not match the space file");
    }
    PolarSpace P = build_polar_space(mf.form, 1L << 22);
    Collineation th;
    try {
        th = validate(P, mf.g);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    SearchOptions so;
    so.seed = o.seed;
    so.probes = o.probes;
    OppDiagramResult r = opposition_diagram(th, so);
    json j = diagram_json(P, r);
    j["class"] = class_name(classify_class(th, r));
    j["space"] = space_json(mf.form);
    std::cout << j.dump(2) << "\n";
    return Pass;
}

int cmd_sweep(const Options& o) {
    FormKind kind = o.sp ? FormKind::Symplectic : kind_from_name(o.kind);
    Family fam = family_of_kind(kind);
    if (o.exhaustive == (o.random > 0)) throw InputError("choose exactly one of --exhaustive and --random N");
    Field F = field_of_order(o.q);
    json spec{{"command", "sweep"},     {"kind", kind_name(kind)}, {"q", o.q},          {"rank", o.rank},
              {"mode", o.exhaustive ? "exhaustive" : "random"}, {"count", o.random}, {"seed", o.seed},
              {"budget", o.budget},     {"probes", o.probes}};
    json report;
    auto t0 = std::chrono::steady_clock::now();
    if (!load_cached(o, spec, report)) {
        PolarSpace P = build_polar_space(make_form(kind, F, o.rank), 1L << 22);
        auto gens = chevalley_group_generators(fam, o.rank, F);
        SweepOptions so;
        so.threads = o.threads;
        so.search.seed = o.seed;
        so.search.probes = o.probes;
        Census c;
        if (o.exhaustive) {
            GroupClosure G = enumerate_group(F, gens, static_cast<size_t>(o.budget));
            if (!G.complete) throw InputError("group order exceeds the budget of " + std::to_string(o.budget) + " elements");
            c = sweep_closure(P, G, so);
        } else {
            c = sweep_elements(P, random_elements(F, gens, o.random, o.seed), so);
        }
        report = json{{"spec", spec}, {"census", census_json(c)}};
        store_cached(o, spec, report);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string text = report.dump(2) + "\n";
    if (o.out.empty())
        std::cout << text;
    else
        write_text_file(o.out, text);
    if (!o.csv.empty()) {
        const json& c = report["census"];
        std::string s = "kind,key,count\n";
        for (auto& [k, v] : c["symbols"].items()) s += "symbol," + k + "," + v.dump() + "\n";
        for (auto& [k, v] : c["classes"].items()) s += "class," + k + "," + v.dump() + "\n";
        for (auto& [k, v] : c["uncapped"].items()) s += "uncapped," + k + "," + v.dump() + "\n";
        for (auto& [k, v] : c["invariants"].items()) s += "violations," + k + "," + v["violations"].dump() + "\n";
        write_text_file(o.csv, s);
    }
    std::fprintf(stderr, "%ld elements, wall time %.2fs\n", report["census"]["elements"].get<long>(), secs);
    return report["census"]["ok"].get<bool>() ? Pass : Violation;
}

int cmd_construct(const Options& o) {
    Field F = field_of_order(o.q);
    const int n = o.rank;
    ClassicalForm form;
    SemilinearMap g;
    const std::string& k = o.name;
    if (k == "elation") {
        form = make_symplectic(F, n);
        std::vector<int> r(n, 0);
        r[0] = 2;
        g = chevalley_generator(F, Family::C, n, r, 1);
    } else if (k == "homology-b") {
        form = make_parabolic(F, n);
        g = homology_B(n, o.index, F);
    } else if (k == "homology-c") {
        form = make_symplectic(F, n);
        g = homology_C(n, o.index, F);
    } else if (k == "symplectic-ffi") {
        form = make_symplectic(F, n);
        g = symplectic_ffi(n, F);
    } else if (k == "hyperbolic-ffi") {
        form = make_hyperbolic(F, n);
        auto [t, d] = irreducible_quadratic(F);
        g = hyperbolic_ffi(n, F, t, d);
    } else if (k == "hermitian-ffi") {
        form = make_hermitian(F, n);
        HermitianSearch hs = hermitian_ffi(n, F);
        if (!hs.map) {
            std::fprintf(stderr, "%s", hs.report.c_str());
            return Violation;
        }
        g = *hs.map;
    } else if (k == "baer") {
        form = make_hermitian(F, n);
        g = baer_involution(n, F);
    } else if (k == "torus") {
        form = make_symplectic(F, n);
        g = opposite_rootgroup_word(n, F, torus_word(F, static_cast<Elem>(o.index)));
    } else if (k == "unipotent") {
        Diagram d = parse_symbol(o.symbol);
        form = chevalley_form(d.family, F, d.n);
        g = generic_unipotent(F, d, std::vector<Elem>(is_polar_closed(d).roots.size(), 1));
    } else if (k == "identity") {
        form = make_form(kind_from_name(o.kind), F, n);
        g.M = Mat::identity(form.dim);
    } else {
        throw InputError("unknown construction '" + k + "'");
    }
    std::string text = matrix_json(form, g).dump(1) + "\n";
    if (o.out.empty())
        std::cout << text;
    else
        write_text_file(o.out, text);
    return Pass;
}

int cmd_verify(const Options& o) {
    const SuiteInfo& info = find_suite(o.name);
    SuiteConfig cfg;
    cfg.threads = o.threads;
    cfg.seed = o.seed;
    cfg.probes = o.probes;
    json spec{{"command", "verify"}, {"suite", info.name}, {"seed", o.seed}, {"probes", o.probes}};
    json report;
    auto t0 = std::chrono::steady_clock::now();
    if (!load_cached(o, spec, report)) {
        SuiteResult r = run_suite(info.name, cfg);
        report = json{{"spec", spec}, {"pass", r.pass}, {"details", r.details}, {"report", r.report}};
        store_cached(o, spec, report);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = report["pass"].get<bool>();
    std::printf("%s: %s\n", info.name.c_str(), pass ? "pass" : "FAIL");
    for (const auto& d : report["details"]) std::printf("  %s\n", d.get<std::string>().c_str());
    if (!o.out.empty()) write_text_file(o.out, report.dump(2) + "\n");
    std::fprintf(stderr, "wall time %.2fs\n", secs);
    return pass ? Pass : Violation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polaris: opposition diagrams of automorphisms of finite polar spaces"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "worker threads (0: all cores)");
    app.add_option("--config", o.config, "JSON file of option values; flags override it");
    app.add_flag("--no-cache", o.no_cache, "bypass ./polaris-cache");

    auto* cat = app.add_subcommand("catalog", "admissible diagrams with polar closed flags");
    cat->add_option("family", o.family)->required();
    cat->add_option("n", o.n)->required();
    cat->add_flag("--closed-only", o.closed_only);

    auto* opp = app.add_subcommand("oppdiagram", "opposition diagram of a matrix");
    opp->add_option("files", o.files, "[space-file] matrix-file")->required();
    opp->add_option("--seed", o.seed);
    opp->add_option("--probes", o.probes);

    auto* sw = app.add_subcommand("sweep", "census of a Chevalley group");
    sw->add_flag("--sp", o.sp, "symplectic space");
    sw->add_option("--kind", o.kind, "symplectic, parabolic or hyperbolic");
    sw->add_option("--q", o.q);
    sw->add_option("--rank", o.rank);
    sw->add_flag("--exhaustive", o.exhaustive);
    sw->add_option("--random", o.random, "number of random elements");
    sw->add_option("--seed", o.seed);
    sw->add_option("--budget", o.budget, "largest group to enumerate");
    sw->add_option("--probes", o.probes);
    sw->add_option("--out", o.out, "JSON report path");
    sw->add_option("--csv", o.csv, "CSV summary path");

    auto* con = app.add_subcommand("construct", "write a named collineation as a matrix file");
    con->add_option("name", o.name,
                    "elation, homology-b, homology-c, symplectic-ffi, hyperbolic-ffi, hermitian-ffi, baer, torus, unipotent, identity")
        ->required();
    con->add_option("--q", o.q);
    con->add_option("--rank", o.rank);
    con->add_option("--i", o.index, "homology index, or the torus parameter");
    con->add_option("--symbol", o.symbol, "diagram for unipotent");
    con->add_option("--kind", o.kind, "form kind for identity");
    con->add_option("--out", o.out);

    auto* ver = app.add_subcommand("verify", "run an acceptance suite");
    ver->add_option("suite", o.name)->required();
    ver->add_option("--seed", o.seed);
    ver->add_option("--probes", o.probes);
    ver->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Pass : BadInput;
    }
    try {
        if (!o.config.empty()) apply_config(app, o.config);
        if (cat->parsed()) return cmd_catalog(o);
        if (opp->parsed()) return cmd_oppdiagram(o);
        if (sw->parsed()) return cmd_sweep(o);
        if (con->parsed()) return cmd_construct(o);
        if (ver->parsed()) return cmd_verify(o);
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return BadInput;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return BadInput;
    }
    return BadInput;
}
