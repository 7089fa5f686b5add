#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bumpkit/core.hpp"

namespace bumpkit {

// Record of a single row insertion. Each path entry is (row, displaced value):
// the value that was bumped out of that row.
struct InsertionTrace {
    int final_row = 1; // 1-based row where the inserted value settled
    int bumps = 0;     // == path.size() == final_row - 1
    std::vector<std::pair<int, int>> path;
};

struct RsResult {
    StandardTableau P;
    StandardTableau Q;
    std::vector<int> bump_sequence; // bump_sequence[i-1] + 1 == row of i in Q
};

// Row insertion P <- k. k must not already be present (DuplicateEntry).
std::pair<StandardTableau, InsertionTrace> insert(const StandardTableau& P, int k);

// The full correspondence with per-step bump counts.
RsResult rs(const Permutation& p);

// Shape of rs(p).P, without building Q.
Partition shape_of(const Permutation& p);

// Insertion shape of any sequence of distinct integers (used for prefix
// shapes; a prefix of a permutation is not itself a permutation of 1..i).
Partition shape_of_word(std::span<const int> word);

// The unique p with rs(p) == (P,Q). Throws ShapeMismatch / NotStandard.
Permutation inverse_rs(const StandardTableau& P, const StandardTableau& Q);

} // namespace bumpkit
