#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polaris/opposition.hpp"

namespace polaris {

struct SweepOptions {
    SearchOptions search;
    int threads = 0; // 0: all available
    bool serial = false;
};

struct InvariantTally {
    long checked = 0;
    long violations = 0;
    long first_violation = -1; // element index
};

struct Census {
    long elements = 0;
    long nontrivial = 0;
    std::map<std::string, long> symbols;
    std::map<std::string, long> classes;
    std::map<std::string, long> uncapped;
    std::map<std::string, long> first_index; // least element index per symbol
    std::map<std::string, InvariantTally> invariants;

    void merge(const Census& o);
    bool ok() const;
    bool operator==(const Census& o) const;
};

// invariant names checked on each element
std::vector<std::string> invariant_names(const PolarSpace& P);

void analyse_element(const PolarSpace& P, const SemilinearMap& g, long index, const SearchOptions& opt, Census& c);
Census sweep_closure(const PolarSpace& P, const GroupClosure& G, const SweepOptions& opt);
Census sweep_elements(const PolarSpace& P, const std::vector<SemilinearMap>& elems, const SweepOptions& opt);
// random words of the given length in the generators and their powers
std::vector<SemilinearMap> random_elements(const Field& F, const std::vector<SemilinearMap>& gens, long count, std::uint64_t seed, int length = 48);

} // namespace polaris
