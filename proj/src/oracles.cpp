#include "bumpkit/oracles.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "bumpkit/rs.hpp"

namespace bumpkit {

namespace {

// Longest strictly decreasing (dir < 0) or increasing (dir > 0) subsequence
// of the positions selected by mask.
int longest_monotone(const std::vector<int>& word, unsigned mask, int dir) {
    std::vector<int> kept;
    for (size_t i = 0; i < word.size(); ++i)
        if (mask & (1u << i)) kept.push_back(word[i]);
    std::vector<int> best(kept.size(), 1);
    int longest = kept.empty() ? 0 : 1;
    for (size_t j = 0; j < kept.size(); ++j) {
        for (size_t i = 0; i < j; ++i)
            if ((dir < 0 ? kept[i] > kept[j] : kept[i] < kept[j]))
                best[j] = std::max(best[j], best[i] + 1);
        longest = std::max(longest, best[j]);
    }
    return longest;
}

// Largest kept-subset size whose longest monotone run in direction `dir`
// is at most k. Sizes are tried from n downward (Gosper's hack per size).
int greene_search(const Permutation& p, int k, int dir, int cap) {
    const int n = p.size();
    if (n > cap)
        throw CapExceeded("greene oracle beyond cap at n=" + std::to_string(n));
    if (k <= 0) return 0;
    if (longest_monotone(p.word(), (1u << n) - 1, dir) <= k) return n;
    for (int s = n - 1; s >= 1; --s) {
        unsigned mask = (1u << s) - 1;
        while (mask < (1u << n)) {
            if (longest_monotone(p.word(), mask, dir) <= k) return s;
            const unsigned c = mask & (~mask + 1), r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return 0;
}

} // namespace

int greene_I(const Permutation& p, int k, int cap) {
    return greene_search(p, k, -1, cap);
}

int greene_D(const Permutation& p, int k, int cap) {
    return greene_search(p, k, +1, cap);
}

int alpha_by_removal(const Permutation& p, int i, int cap) {
    return p.size() - greene_I(p, i, cap);
}

int min_deletion_insertion_moves(const Permutation& p, int cap) {
    const int n = p.size();
    if (n > cap)
        throw CapExceeded("deletion-insertion BFS beyond cap at n=" + std::to_string(n));
    const std::vector<int> start = Permutation::identity(n).word();
    std::map<std::vector<int>, int> dist{{start, 0}};
    std::queue<std::vector<int>> queue;
    queue.push(start);
    // The move set is symmetric, so distance from the identity equals
    // distance to it.
    while (!queue.empty()) {
        const auto w = queue.front();
        queue.pop();
        if (w == p.word()) return dist[w];
        const int d = dist[w];
        for (int i = 0; i < n; ++i) {
            std::vector<int> base = w;
            const int card = base[static_cast<size_t>(i)];
            base.erase(base.begin() + i);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                std::vector<int> next = base;
                next.insert(next.begin() + j, card);
                if (dist.emplace(next, d + 1).second) queue.push(next);
            }
        }
    }
    return dist.at(p.word());
}

namespace {

int greedy_run_count(const std::vector<int>& word) {
    int count = 0;
    size_t i = 0;
    while (i < word.size()) {
        ++count;
        size_t j = i + 1;
        int dir = 0;
        while (j < word.size()) {
            const int step = word[j] - word[j - 1];
            if (step != 1 && step != -1) break;
            if (dir == 0)
                dir = step;
            else if (step != dir)
                break;
            ++j;
        }
        i = j;
    }
    return count;
}

// Enumerate reduced words by recursing on right descents; letters are
// collected last-first and reversed before scoring.
void reduced_words_rec(std::vector<int>& w, std::vector<int>& suffix, int& best) {
    bool any_descent = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] <= w[i + 1]) continue;
        any_descent = true;
        std::swap(w[i], w[i + 1]);
        suffix.push_back(static_cast<int>(i) + 1);
        reduced_words_rec(w, suffix, best);
        suffix.pop_back();
        std::swap(w[i], w[i + 1]);
    }
    if (!any_descent) {
        std::vector<int> word(suffix.rbegin(), suffix.rend());
        best = std::min(best, greedy_run_count(word));
    }
}

} // namespace

int run_statistic_bruteforce(const Permutation& p, int cap) {
    if (p.size() > cap)
        throw CapExceeded("reduced word enumeration beyond cap at n=" +
                          std::to_string(p.size()));
    std::vector<int> w = p.word();
    std::vector<int> suffix;
    int best = p.size() * p.size(); // above any possible run count
    reduced_words_rec(w, suffix, best);
    return best;
}

long bump_by_simulation(const Permutation& p) {
    StandardTableau t;
    long bumps = 0;
    for (int v : p.word()) {
        auto [next, trace] = insert(t, v);
        t = std::move(next);
        bumps += trace.bumps;
    }
    return bumps;
}

namespace {

// Place 1..n one value at a time into any cell whose upper and left
// neighbours are already filled.
void syt_rec(const Partition& shape, std::vector<int>& row_fill, int placed, int n, Bigint& count) {
    if (placed == n) {
        ++count;
        return;
    }
    for (int r = 0; r < shape.num_parts(); ++r) {
        const int len = row_fill[static_cast<size_t>(r)];
        if (len >= shape.part(r + 1)) continue;
        if (r > 0 && row_fill[static_cast<size_t>(r) - 1] <= len) continue;
        ++row_fill[static_cast<size_t>(r)];
        syt_rec(shape, row_fill, placed + 1, n, count);
        --row_fill[static_cast<size_t>(r)];
    }
}

} // namespace

Bigint count_syt_backtracking(const Partition& lambda, int cap) {
    if (lambda.size() > cap)
        throw CapExceeded("SYT backtracking beyond cap at n=" + std::to_string(lambda.size()));
    std::vector<int> row_fill(static_cast<size_t>(lambda.num_parts()), 0);
    Bigint count = 0;
    syt_rec(lambda, row_fill, 0, lambda.size(), count);
    return count;
}

Bigint partition_count_pentagonal(int n) {
    std::vector<Bigint> p(static_cast<size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Bigint total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<size_t>(m - g1)];
            if (g2 <= m) total += sign * p[static_cast<size_t>(m - g2)];
        }
        p[static_cast<size_t>(m)] = total;
    }
    return p[static_cast<size_t>(n)];
}

} // namespace bumpkit
