#include "bumpkit/statistics.hpp"

#include <algorithm>

namespace bumpkit {

namespace {

// A term v may follow a valid prefix iff v == 0 or v-1 still leads v in the
// running tally.
bool is_ballot(const std::vector<int>& terms, std::vector<int>& tally) {
    int max_term = -1;
    for (int t : terms) max_term = std::max(max_term, t);
    tally.assign(static_cast<size_t>(max_term) + 2, 0);
    for (int t : terms) {
        if (t < 0) return false;
        if (t > 0 && tally[static_cast<size_t>(t) - 1] <= tally[static_cast<size_t>(t)])
            return false;
        ++tally[static_cast<size_t>(t)];
    }
    return true;
}

} // namespace

WeakBallotSequence::WeakBallotSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    std::vector<int> tally;
    if (!is_ballot(terms_, tally))
        throw NotABallotSequence("prefix inequality violated");
}

WeakBallotSequence WeakBallotSequence::unchecked(std::vector<int> terms) {
    WeakBallotSequence b;
    b.terms_ = std::move(terms);
    return b;
}

long bump_from_shape(const Partition& lambda) {
    long total = 0;
    for (int i = 1; i <= lambda.num_parts(); ++i)
        total += static_cast<long>(i - 1) * lambda.part(i);
    return total;
}

long bump(const Permutation& p) {
    return bump_from_shape(shape_of(p));
}

WeakBallotSequence bump_sequence(const Permutation& p) {
    return WeakBallotSequence::unchecked(rs(p).bump_sequence);
}

Permutation ballot_to_permutation(const WeakBallotSequence& b) {
    std::vector<std::vector<int>> qrows;
    for (int i = 1; i <= b.size(); ++i) {
        const int r = b.terms()[static_cast<size_t>(i) - 1];
        if (r == static_cast<int>(qrows.size())) qrows.emplace_back();
        qrows[static_cast<size_t>(r)].push_back(i);
    }
    auto Q = StandardTableau::unchecked(std::move(qrows));
    return inverse_rs(Q, Q);
}

namespace {

void ballot_rec(int remaining, int max_new, std::vector<int>& terms, std::vector<int>& tally,
                const std::function<void(const std::vector<int>&)>& fn) {
    if (remaining == 0) {
        fn(terms);
        return;
    }
    for (int v = 0; v <= max_new; ++v) {
        if (v > 0 && tally[static_cast<size_t>(v) - 1] <= tally[static_cast<size_t>(v)])
            continue;
        ++tally[static_cast<size_t>(v)];
        terms.push_back(v);
        ballot_rec(remaining - 1, std::max(max_new, v + 1), terms, tally, fn);
        terms.pop_back();
        --tally[static_cast<size_t>(v)];
    }
}

} // namespace

void for_each_ballot_sequence(int n, const std::function<void(const std::vector<int>&)>& fn,
                              int cap) {
    if (n > cap)
        throw CapExceeded("ballot enumeration for n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    std::vector<int> terms, tally(static_cast<size_t>(n) + 1, 0);
    terms.reserve(static_cast<size_t>(n));
    if (n == 0) {
        fn(terms);
        return;
    }
    ballot_rec(n, 0, terms, tally, fn);
}

std::vector<WeakBallotSequence> enumerate_ballot_sequences(int n, int cap) {
    std::vector<WeakBallotSequence> out;
    for_each_ballot_sequence(
        n, [&](const std::vector<int>& terms) { out.push_back(WeakBallotSequence::unchecked(terms)); },
        cap);
    return out;
}

int alpha(const Permutation& p, int i) {
    const auto lambda = shape_of(p);
    long kept = 0;
    for (int j = 1; j <= std::min(i, lambda.num_parts()); ++j) kept += lambda.part(j);
    return p.size() - static_cast<int>(kept);
}

std::vector<int> alpha_sequence(const Permutation& p) {
    const auto lambda = shape_of(p);
    std::vector<int> out;
    int remaining = p.size();
    for (int i = 1; i <= lambda.num_parts(); ++i) {
        remaining -= lambda.part(i);
        out.push_back(remaining);
    }
    return out;
}

int weakbump(const Permutation& p) {
    return p.size() - shape_of(p).part(1);
}

int bump_i_minimality_check(const Permutation& p, int i) {
    const auto& w = p.word();
    const auto before = shape_of_word({w.data(), static_cast<size_t>(i) - 1});
    const auto after = shape_of_word({w.data(), static_cast<size_t>(i)});
    long sum_before = 0, sum_after = 0;
    for (int j = 1;; ++j) {
        sum_before += before.part(j);
        sum_after += after.part(j);
        if (sum_after > sum_before) return j - 1;
    }
}

} // namespace bumpkit
