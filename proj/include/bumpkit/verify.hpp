#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "bumpkit/oracles.hpp"

namespace bumpkit {

inline constexpr int kVerifyPermutationHardCap = 8;
inline constexpr int kVerifyPartitionHardCap = 40;

// A registered invariant/oracle suite. Suites are data-driven: registering a
// new invariant is one entry in the registry.
struct VerifySuite {
    std::string name;
    std::string description;
    bool partition_scale = false; // hard cap 40 instead of 8
    // Appends reports; disagreements include the first counterexample.
    std::function<void(int max_n, std::vector<OracleReport>&)> run;
};

const std::vector<VerifySuite>& verify_suites();

struct VerifyOptions {
    int max_n = 6;
    std::vector<std::string> suites; // empty = all
};

// Streams one OracleReport JSON line per report (sorted), then a summary
// line. Returns true iff every report agrees. Throws CapExceeded when max_n
// exceeds the hard cap of a selected suite, and Error for unknown suites.
bool run_verify(const VerifyOptions& options, std::ostream& out);

std::string oracle_report_json(const OracleReport& report);

} // namespace bumpkit
