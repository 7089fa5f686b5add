#pragma once

#include <string>
#include <vector>

#include "bumpkit/core.hpp"

namespace bumpkit {

// Aggregate of the per-permutation statistics exposed by the stats command.
struct StatsReport {
    std::vector<int> permutation;
    int n = 0;
    std::vector<int> shape;
    std::vector<std::vector<int>> P;
    std::vector<std::vector<int>> Q;
    long bump = 0;
    std::vector<int> bump_sequence;
    int weakbump = 0;
    std::vector<int> descents;
    std::vector<int> alpha; // alpha_1 .. alpha_{rows}

    bool operator==(const StatsReport&) const = default;
};

StatsReport make_stats_report(const Permutation& p);

std::string stats_to_text(const StatsReport& r);
std::string stats_to_json(const StatsReport& r);
StatsReport stats_from_json(const std::string& text);

} // namespace bumpkit
