#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "polaris/chevalley.hpp"
#include "polaris/sweep.hpp"

using namespace polaris;

int main(int argc, char** argv) {
    int q = argc > 1 ? std::atoi(argv[1]) : 3;
    int n = argc > 2 ? std::atoi(argv[2]) : 2;
    Field F = field_of_order(q);
    PolarSpace P = build_polar_space(make_symplectic(F, n));
    GroupClosure G = enumerate_group(F, chevalley_group_generators(Family::C, n, F));
    std::printf("Sp(%d,%d): %zu elements, %d points, %d threads available\n", 2 * n, q, G.size(), P.N, omp_get_max_threads());

    auto run = [&](bool serial) {
        SweepOptions o;
        o.serial = serial;
        auto t0 = std::chrono::steady_clock::now();
        Census c = sweep_closure(P, G, o);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%-8s %8.3fs  %10.0f elements/s\n", serial ? "serial" : "parallel", s, c.elements / s);
        return c;
    };
    Census a = run(true);
    Census b = run(false);
    bool same = a == b;
    std::printf("censuses %s\n", same ? "identical" : "DIFFER");
    return same ? 0 : 1;
}
