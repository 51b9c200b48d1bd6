#pragma once
#include <optional>
#include <string>
#include <vector>

#include "polaris/diagram.hpp"
#include "polaris/matrix.hpp"
#include "polaris/polar.hpp"

namespace polaris {

int ambient_dim(Family f, int n);
// the polar space whose Chevalley group the generators live in (none for A)
ClassicalForm chevalley_form(Family f, const Field& F, int n);

// root given in the e-basis; negative roots use the transpose
SemilinearMap chevalley_generator(const Field& F, Family f, int n, const std::vector<int>& root, Elem a);
// x_{+-a}(c) for simple roots a and c running over an additive basis of the field
std::vector<SemilinearMap> chevalley_group_generators(Family f, int n, const Field& F);
SemilinearMap dn_swap(const Field& F, int n);
SemilinearMap generic_unipotent(const Field& F, const Diagram& d, const std::vector<Elem>& coeffs);
SemilinearMap homology_B(int n, int i, const Field& F);
SemilinearMap homology_C(int n, int i, const Field& F);

// fixed-point free exactly when -b is a nonsquare; default b is the least such element
SemilinearMap symplectic_ffi(int n, const Field& F, std::optional<Elem> b = std::nullopt);
SemilinearMap hyperbolic_ffi(int n, const Field& F, Elem t, Elem d);

struct HermitianSearch {
    std::optional<SemilinearMap> map;
    struct Trial {
        Elem r;
        bool isometry;
        long fixed_points;
    };
    std::vector<Trial> trials;
    std::string report;
};
HermitianSearch hermitian_ffi(const PolarSpace& H);
HermitianSearch hermitian_ffi(int n, const Field& F);
SemilinearMap hermitian_block_map(int n, const Field& F, Elem r);

SemilinearMap baer_involution(int n, const Field& F);

struct RootLetter {
    bool negative = false; // x_{-phi} instead of x_phi
    Elem a = 0;
};
SemilinearMap opposite_rootgroup_word(int n, const Field& F, const std::vector<RootLetter>& word);
// word for diag(t, 1, .., 1, 1/t, 1, ..) in the long root SL_2
std::vector<RootLetter> torus_word(const Field& F, Elem t);

// preserves the form up to a nonzero scalar (quadratic form as well for orthogonal kinds)
bool preserves_form(const ClassicalForm& form, const SemilinearMap& g, Elem* scalar = nullptr);

} // namespace polaris
