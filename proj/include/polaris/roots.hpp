#pragma once
#include <string>
#include <vector>

namespace polaris {

enum class Family { A, B, C, D };

char family_char(Family f);
Family family_from_char(char c);

struct Root {
    std::vector<int> e; // coordinates in the orthonormal e-basis
    std::vector<int> c; // coordinates in the simple-root basis
    int height = 0;
    bool operator==(const Root& o) const { return e == o.e; }
};

struct RootSystem {
    Family family = Family::A;
    int n = 0;
    int dim = 0; // length of e-vectors: n+1 for A, n otherwise
    std::vector<std::vector<int>> simple;
    std::vector<Root> positive;
    Root highest;

    std::vector<int> to_simple(const std::vector<int>& e) const;
    bool adjacent(int a, int b) const; // nodes are 1-based
    // Highest root among positive roots supported inside the given node set.
    const Root& highest_in(const std::vector<int>& nodes) const;
    std::vector<int> polar_type_in(const std::vector<int>& nodes) const;
    std::vector<std::vector<int>> components(const std::vector<int>& nodes) const;
    bool is_root(const std::vector<int>& e) const;
};

int dot(const std::vector<int>& a, const std::vector<int>& b);

RootSystem build_root_system(Family f, int n);
std::vector<int> polar_type(const RootSystem& rs);
// perm[i-1] is the image of node i
std::vector<int> opposition_involution(const RootSystem& rs);

} // namespace polaris
