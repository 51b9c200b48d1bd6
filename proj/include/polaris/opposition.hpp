#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polaris/diagram.hpp"
#include "polaris/matrix.hpp"
#include "polaris/polar.hpp"

namespace polaris {

struct Collineation {
    const PolarSpace* P = nullptr;
    SemilinearMap g;
    std::vector<int> perm; // point permutation
    bool trivial = false;  // acts as the identity on points
    bool swaps_classes = false;
    std::uint64_t hash = 0;

    int operator()(int p) const { return perm[p]; }
};

// throws std::invalid_argument when g is not an automorphism of P
Collineation validate(const PolarSpace& P, const SemilinearMap& g, bool check_form = true);

struct SearchOptions {
    int probes = 512;
    long probe_threshold = 2048; // below this many subspaces go straight to the exhaustive scan
    std::uint64_t seed = 0x5eed;
};

bool maps_opposite(const Collineation& th, const int* basis, int k);
// a d-space X with X opposite X^theta
std::optional<std::vector<int>> is_nondomestic_dim(const Collineation& th, int d, const SearchOptions& opt = {});

struct Witness {
    std::vector<int> orbit;
    std::vector<int> basis;
};

struct OppDiagramResult {
    Family family = Family::C;
    int n = 0;
    int twist = 1;
    std::vector<std::vector<int>> orbits; // encircled orbits as computed
    std::vector<Witness> witnesses;
    std::optional<Diagram> match;
    std::string symbol;
    std::string alias; // B-name of a symplectic diagram in characteristic 2

    bool capped() const { return match.has_value(); }
    bool empty() const { return orbits.empty(); }
    std::vector<int> nodes() const;
    bool full() const { return static_cast<int>(nodes().size()) == n; }
};

OppDiagramResult opposition_diagram(const Collineation& th, const SearchOptions& opt = {});
std::string raw_descriptor(const OppDiagramResult& r);

enum class CollineationClass { Identity, I, II, III, NotDomestic };
std::string class_name(CollineationClass c);

bool is_point_domestic(const Collineation& th);
long fixed_point_count(const Collineation& th);
// a maximal flag mapped to an opposite, vertex by vertex
std::optional<std::vector<std::vector<int>>> chamber_nondomestic(const Collineation& th);
CollineationClass classify_class(const Collineation& th, const OppDiagramResult& diag);
CollineationClass classify_class(const Collineation& th);

// componentwise opposition of two flags (bases of X_0 < X_1 < ...)
bool flags_opposite(const PolarSpace& P, const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b);

struct FixedStructure {
    Bits points;
    long point_count = 0;
    std::vector<std::vector<int>> lines;
    bool subspace = false;
    int corank = -1;       // of the whole fixed point set, when it is a subspace
    int eigen_corank = -1; // least corank over the eigenvalue classes of fixed points
};

bool is_fixed(const Collineation& th, const int* basis, int k);
std::vector<std::vector<int>> fixed_subspaces(const Collineation& th, int d);
FixedStructure fixed_structure(const Collineation& th, bool with_lines = true);
int corank_of_fixed_set(const Collineation& th);

bool is_central_elation(const Collineation& th);
bool is_axial(const Collineation& th);
bool is_homology_pattern(const Collineation& th, int a, int b);
// every non-fixed point p has theta^2 p on the line <p, theta p>
bool pdlinefixed(const Collineation& th);

struct DerivedGeometry {
    long points = 0; // fixed lines
    long lines = 0;  // fixed 3-spaces
    bool one_or_all = false;
    int rank = 0;
};
DerivedGeometry fixed_line_geometry(const Collineation& th);

struct GroupClosure {
    int D = 0;
    size_t stride = 0; // D*D matrix bytes followed by the Frobenius exponent
    std::vector<std::uint8_t> arena;
    bool complete = true;

    size_t size() const { return stride ? arena.size() / stride : 0; }
    SemilinearMap at(size_t i) const;
};
GroupClosure enumerate_group(const Field& F, const std::vector<SemilinearMap>& gens, size_t budget = 2000000);

bool is_scalar_map(const SemilinearMap& g);
// order is a power of the characteristic
bool is_unipotent(const Field& F, const SemilinearMap& g);

} // namespace polaris
