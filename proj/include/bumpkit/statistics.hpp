#pragma once

#include <vector>

#include "bumpkit/core.hpp"
#include "bumpkit/rs.hpp"

namespace bumpkit {

// A sequence a_1..a_n of non-negative integers where, in every prefix, the
// count of i's is >= the count of j's whenever i < j. Exactly the set of
// bump sequences.
class WeakBallotSequence {
public:
    WeakBallotSequence() = default;
    // Throws NotABallotSequence on a prefix violation (or a negative term).
    explicit WeakBallotSequence(std::vector<int> terms);

    static WeakBallotSequence unchecked(std::vector<int> terms);

    int size() const { return static_cast<int>(terms_.size()); }
    const std::vector<int>& terms() const { return terms_; }

    bool operator==(const WeakBallotSequence&) const = default;

private:
    std::vector<int> terms_;
};

// Total bumps over the RS insertion of p; computed from the shape as
// sum (i-1)*lambda_i.
long bump(const Permutation& p);
long bump_from_shape(const Partition& lambda);

// Per-insertion bump counts; always a weak ballot sequence.
WeakBallotSequence bump_sequence(const Permutation& p);

// Inverse direction of the ballot bijection: build Q by appending i to row
// b_i + 1, set P = Q, and invert. The result is an involution whose bump
// sequence equals b.
Permutation ballot_to_permutation(const WeakBallotSequence& b);

std::vector<WeakBallotSequence> enumerate_ballot_sequences(int n, int cap = kExhaustiveCap);
void for_each_ballot_sequence(int n, const std::function<void(const std::vector<int>&)>& fn,
                              int cap = kExhaustiveCap);

// Minimal removals so the remainder is a union of i increasing subsequences:
// n - (lambda_1 + ... + lambda_i). Zero once i reaches the row count.
int alpha(const Permutation& p, int i);
// (alpha_1, ..., alpha_k) with k = number of rows; final entry is 0.
std::vector<int> alpha_sequence(const Permutation& p);

// Number of insertions that bump at all: n - lambda_1.
int weakbump(const Permutation& p);

// bump_i recomputed from Greene sums of the two prefix shapes:
// min{ j : I_j(p_1..p_i) > I_j(p_1..p_{i-1}) } - 1.
int bump_i_minimality_check(const Permutation& p, int i);

} // namespace bumpkit
