#pragma once
#include <string>
#include <vector>

#include "polaris/roots.hpp"

namespace polaris {

struct Diagram {
    Family family = Family::A;
    int n = 0, i = 0, j = 1, t = 1;
    std::vector<std::vector<int>> orbits; // encircled node orbits, 1-based
    bool special = false;                 // special-rank entry handled outside the engine

    std::vector<int> nodes() const;
    bool empty() const { return orbits.empty(); }
    bool operator==(const Diagram& o) const {
        return family == o.family && n == o.n && i == o.i && j == o.j && t == o.t;
    }
};

struct Extraction {
    bool closed = false;
    std::vector<Root> roots;             // highest roots removed, in order
    std::vector<std::vector<int>> steps; // residual node set before each removal
    std::vector<int> stuck_nodes;        // nodes left when the procedure stops
    std::vector<std::vector<int>> stuck_orbits;
};

std::vector<Diagram> catalog(Family f, int n);

Extraction is_polar_closed(const Diagram& d);
// All root sets reachable by exploring every removal order.
std::vector<std::vector<std::vector<int>>> all_extraction_root_sets(const Diagram& d);

std::string format_symbol(const Diagram& d);
Diagram parse_symbol(const std::string& text);

} // namespace polaris
