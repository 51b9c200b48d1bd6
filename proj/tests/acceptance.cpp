#include <chrono>
#include <cstdio>
#include <cstring>
#include <exception>
#include <string>

#include "polaris/suites.hpp"

using namespace polaris;

int main(int argc, char** argv) {
    std::string only;
    bool verbose = false;
    for (int a = 1; a < argc; ++a) {
        if (!std::strcmp(argv[a], "--criterion") && a + 1 < argc)
            only = argv[++a];
        else if (!std::strcmp(argv[a], "-v"))
            verbose = true;
    }
    SuiteConfig cfg;
    int failed = 0;
    for (const SuiteInfo& s : suite_list()) {
        if (!only.empty() && only != std::to_string(s.criterion) && only != s.name) continue;
        auto t0 = std::chrono::steady_clock::now();
        bool pass = false;
        std::string note;
        SuiteResult r;
        try {
            r = run_suite(s.name, cfg);
            pass = r.pass;
            if (!r.details.empty()) note = r.details.front();
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d %-30s %s  (%.1fs) %s\n", s.criterion, s.name.c_str(), pass ? "PASS" : "FAIL", secs, note.c_str());
        if (verbose || !pass)
            for (size_t i = 1; i < r.details.size(); ++i) std::printf("    %s\n", r.details[i].c_str());
        failed += !pass;
    }
    return failed ? 1 : 0;
}
