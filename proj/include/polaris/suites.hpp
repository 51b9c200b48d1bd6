#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "polaris/io.hpp"

namespace polaris {

struct SuiteConfig {
    int threads = 0;
    std::uint64_t seed = 0x5eed;
    int probes = 512;
};

struct SuiteInfo {
    int criterion;
    std::string name;
    std::string title;
};

struct SuiteResult {
    std::string name;
    int criterion = 0;
    bool pass = false;
    std::vector<std::string> details;
    json report;
};

const std::vector<SuiteInfo>& suite_list();
// by name or criterion number
const SuiteInfo& find_suite(const std::string& key);
SuiteResult run_suite(const std::string& key, const SuiteConfig& cfg);

} // namespace polaris
