#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hodgepoly/series.hpp"

namespace hodgepoly {

struct VerifyConfig {
    int max_weight = 4;      // |a| bound for index-vector suites
    int max_length = 4;      // n bound for index-vector suites
    int guard = 2;
    int order = 10;          // t-order for prop12, genus bound for exp24
    int mumford_genus = 3;
    int mumford_markings = 3;
    int jobs = 1;
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

// theorem01, prop12, prop21, prop22, cor23, mumford, exp24, avalue
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, SeriesEngine& engine, const VerifyConfig& config);

}  // namespace hodgepoly
