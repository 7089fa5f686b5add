#pragma once

#include <string>

#include "bumpkit/core.hpp"

namespace bumpkit {

// Deliberately slow, definition-level computations used to certify the fast
// paths on small instances. None of them consults the RS shape machinery.

struct OracleReport {
    std::string instance;
    std::string fast_value;
    std::string oracle_value;
    bool agree = false;
};

inline constexpr int kGreeneCap = 10; // subset search
inline constexpr int kMovesCap = 6;   // BFS over S_n
inline constexpr int kRunWordsCap = 5; // reduced-word enumeration

// Maximal number of elements in a union of k increasing subsequences, found
// by searching kept subsets from largest size down and testing that the kept
// subsequence has no decreasing subsequence longer than k (Dilworth).
int greene_I(const Permutation& p, int k, int cap = kGreeneCap);

// Dual: decreasing subsequences, tested via increasing runs.
int greene_D(const Permutation& p, int k, int cap = kGreeneCap);

// Definitional removal count: n - greene_I(p, i).
int alpha_by_removal(const Permutation& p, int i, int cap = kGreeneCap);

// Fewest remove-one-reinsert moves to sort p, by BFS to the identity.
int min_deletion_insertion_moves(const Permutation& p, int cap = kMovesCap);

// Minimum over all reduced words of the number of maximal runs (contiguous
// blocks of consecutive increasing or decreasing letters; a single letter is
// a degenerate run).
int run_statistic_bruteforce(const Permutation& p, int cap = kRunWordsCap);

// Total displacement events during the insertion of p, counted directly.
long bump_by_simulation(const Permutation& p);

// Direct backtracking enumeration of standard Young tableaux of shape lambda.
Bigint count_syt_backtracking(const Partition& lambda, int cap = 12);

// p(n) by the Euler pentagonal-number recurrence.
Bigint partition_count_pentagonal(int n);

} // namespace bumpkit
