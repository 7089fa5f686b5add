#include "bumpkit/rs.hpp"

#include <algorithm>

namespace bumpkit {

namespace {

// Insert k into ragged rows, recording displacements. Returns the 1-based row
// where k settled. Rows stay strictly increasing, lengths weakly decreasing.
int insert_into_rows(std::vector<std::vector<int>>& rows, int k, InsertionTrace* trace) {
    int r = 0;
    for (;; ++r) {
        if (r == static_cast<int>(rows.size())) {
            rows.emplace_back();
        }
        auto& row = rows[static_cast<size_t>(r)];
        // Leftmost entry strictly greater than k; rows strictly increase, so
        // this is also the rightmost entry y with k < y reachable by k.
        auto it = std::upper_bound(row.begin(), row.end(), k);
        if (it == row.end()) {
            row.push_back(k);
            return r + 1;
        }
        const int bumped = *it;
        *it = k;
        if (trace) trace->path.emplace_back(r + 1, bumped);
        k = bumped;
    }
}

} // namespace

std::pair<StandardTableau, InsertionTrace> insert(const StandardTableau& P, int k) {
    if (P.contains(k))
        throw DuplicateEntry("value " + std::to_string(k) + " already present");
    auto rows = P.rows();
    InsertionTrace trace;
    trace.final_row = insert_into_rows(rows, k, &trace);
    trace.bumps = static_cast<int>(trace.path.size());
    return {StandardTableau::unchecked(std::move(rows)), trace};
}

RsResult rs(const Permutation& p) {
    const int n = p.size();
    std::vector<std::vector<int>> prows, qrows;
    RsResult result;
    result.bump_sequence.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int settled = insert_into_rows(prows, p.at(i), nullptr);
        if (settled > static_cast<int>(qrows.size())) qrows.emplace_back();
        qrows[static_cast<size_t>(settled) - 1].push_back(i);
        result.bump_sequence.push_back(settled - 1);
    }
    result.P = StandardTableau::unchecked(std::move(prows));
    result.Q = StandardTableau::unchecked(std::move(qrows));
    return result;
}

Partition shape_of(const Permutation& p) {
    return shape_of_word(p.word());
}

Partition shape_of_word(std::span<const int> word) {
    std::vector<std::vector<int>> rows;
    for (int v : word) insert_into_rows(rows, v, nullptr);
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition::unchecked(std::move(parts));
}

Permutation inverse_rs(const StandardTableau& P, const StandardTableau& Q) {
    if (P.shape() != Q.shape())
        throw ShapeMismatch("P and Q shapes differ: " + P.shape().to_string() + " vs " +
                            Q.shape().to_string());
    if (!P.is_standard() || !Q.is_standard())
        throw NotStandard("P and Q must be standard on {1..n}");

    auto prows = P.rows();
    const int n = P.num_entries();
    std::vector<int> word(static_cast<size_t>(n));
    // Un-insert in decreasing order of the Q entry. The cell of i in Q is an
    // outer corner of the current shape; reverse the bumping chain upward.
    std::vector<std::pair<int, int>> q_cell(static_cast<size_t>(n) + 1); // value -> (row, col)
    for (int r = 1; r <= Q.num_rows(); ++r)
        for (int c = 1; c <= static_cast<int>(Q.row(r).size()); ++c)
            q_cell[static_cast<size_t>(Q.row(r)[static_cast<size_t>(c) - 1])] = {r, c};

    for (int i = n; i >= 1; --i) {
        const auto [r, c] = q_cell[static_cast<size_t>(i)];
        auto& row = prows[static_cast<size_t>(r) - 1];
        int carry = row.back();
        row.pop_back();
        if (row.empty()) prows.pop_back();
        (void)c; // the corner is necessarily the last cell of its row
        for (int up = r - 1; up >= 1; --up) {
            auto& target = prows[static_cast<size_t>(up) - 1];
            // Rightmost entry smaller than carry.
            auto it = std::lower_bound(target.begin(), target.end(), carry);
            --it;
            std::swap(*it, carry);
        }
        word[static_cast<size_t>(i) - 1] = carry;
    }
    return Permutation(std::move(word));
}

} // namespace bumpkit
