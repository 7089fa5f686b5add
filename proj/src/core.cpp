#include "bumpkit/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bumpkit {

namespace {

void validate_word(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n)
            throw NotAPermutation("value " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw NotAPermutation("duplicate value " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
}

} // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    validate_word(word_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return unchecked(std::move(w));
}

Permutation Permutation::unchecked(std::vector<int> word) {
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i) os << ' ';
        os << word_[i];
    }
    return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::unchecked(std::vector<int> parts) {
    Partition p;
    p.size_ = std::accumulate(parts.begin(), parts.end(), 0);
    p.parts_ = std::move(parts);
    return p;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> all;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty())
            throw NotStandard("empty tableau row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw NotStandard("row lengths must be weakly decreasing");
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0 && row[c] <= row[c - 1])
                throw NotStandard("rows must strictly increase");
            if (r > 0 && c < rows_[r - 1].size() && row[c] <= rows_[r - 1][c])
                throw NotStandard("columns must strictly increase");
            all.push_back(row[c]);
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw NotStandard("duplicate entry");
}

StandardTableau StandardTableau::unchecked(std::vector<std::vector<int>> rows) {
    StandardTableau t;
    t.rows_ = std::move(rows);
    return t;
}

int StandardTableau::num_entries() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition::unchecked(std::move(parts));
}

bool StandardTableau::is_standard() const {
    const int n = num_entries();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (const auto& row : rows_)
        for (int v : row) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
    return true;
}

bool StandardTableau::contains(int value) const {
    for (const auto& row : rows_)
        if (std::binary_search(row.begin(), row.end(), value)) return true;
    return false;
}

std::string StandardTableau::to_string() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << '\n';
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ' ';
            os << rows_[r][c];
        }
    }
    return os.str();
}

Permutation parse_permutation(const std::string& text) {
    const bool has_separator =
        text.find_first_of(", \t\n\r") != std::string::npos;
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    size_t start = 0;
    while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
        ++start;
    trimmed = trimmed.substr(start);

    std::vector<int> word;
    const bool all_digits =
        !trimmed.empty() &&
        std::all_of(trimmed.begin(), trimmed.end(),
                    [](unsigned char c) { return std::isdigit(c); });
    if (!has_separator && all_digits && trimmed.size() > 1) {
        // Digit-string form: one value per character (so only valid for n <= 9).
        for (char c : trimmed) word.push_back(c - '0');
        return Permutation(std::move(word));
    }

    std::string spaced = trimmed;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream is(spaced);
    std::string token;
    while (is >> token) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw MalformedInput("non-integer token '" + token + "'");
        }
        if (pos != token.size())
            throw MalformedInput("non-integer token '" + token + "'");
        word.push_back(v);
    }
    if (word.empty() && !trimmed.empty())
        throw MalformedInput("no integer tokens in '" + text + "'");
    return Permutation(std::move(word));
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> q(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) q[static_cast<size_t>(p.at(i)) - 1] = i;
    return Permutation::unchecked(std::move(q));
}

Permutation reverse(const Permutation& p) {
    std::vector<int> w(p.word().rbegin(), p.word().rend());
    return Permutation::unchecked(std::move(w));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    const int cols = lambda.part(1);
    parts.reserve(static_cast<size_t>(cols));
    for (int i = 1; i <= cols; ++i) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= i) ++count;
        parts.push_back(count);
    }
    return Partition::unchecked(std::move(parts));
}

int hook_length(const Partition& lambda, Cell c) {
    if (c.row < 1 || c.col < 1 || c.row > lambda.num_parts() || c.col > lambda.part(c.row))
        throw CellOutsideShape("cell (" + std::to_string(c.row) + "," +
                               std::to_string(c.col) + ") outside " + lambda.to_string());
    int below = 0;
    for (int r = c.row + 1; r <= lambda.num_parts(); ++r)
        if (lambda.part(r) >= c.col) ++below;
    const int right = lambda.part(c.row) - c.col;
    return 1 + below + right;
}

Bigint count_syt(const Partition& lambda) {
    const int n = lambda.size();
    // Hook product, batching small factors into a machine word.
    Bigint hooks = 1;
    unsigned long chunk = 1;
    const auto conj = conjugate(lambda);
    for (int r = 1; r <= lambda.num_parts(); ++r) {
        for (int c = 1; c <= lambda.part(r); ++c) {
            const unsigned long h =
                static_cast<unsigned long>(lambda.part(r) - c + conj.part(c) - r + 1);
            if (chunk > (~0ul) / h) {
                hooks *= chunk;
                chunk = 1;
            }
            chunk *= h;
        }
    }
    hooks *= chunk;
    Bigint nf = factorial(static_cast<unsigned long>(n));
    if (!mpz_divisible_p(nf.get_mpz_t(), hooks.get_mpz_t()))
        throw InternalError("hook product does not divide n! for " + lambda.to_string());
    Bigint f;
    mpz_divexact(f.get_mpz_t(), nf.get_mpz_t(), hooks.get_mpz_t());
    return f;
}

namespace {

void partition_rec(int remaining, int max_part, std::vector<int>& parts,
                   const std::function<void(const std::vector<int>&)>& fn) {
    if (remaining == 0) {
        fn(parts);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        partition_rec(remaining - p, p, parts, fn);
        parts.pop_back();
    }
}

} // namespace

void for_each_partition_max_part(int n, int max_part,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> parts;
    partition_rec(n, max_part, parts, fn);
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    for_each_partition_max_part(n, n == 0 ? 1 : n, fn);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        out.push_back(Partition::unchecked(parts));
    });
    return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn, int cap) {
    if (n > cap)
        throw CapExceeded("exhaustive enumeration of S_" + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(Permutation::unchecked(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> permutations_of(int n, int cap) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

std::vector<int> descent_set(const Permutation& p) {
    std::vector<int> d;
    for (int i = 1; i < p.size(); ++i)
        if (p.at(i) > p.at(i + 1)) d.push_back(i);
    return d;
}

bool avoids_321(const Permutation& p) {
    // p_j is the middle of a 321 pattern iff some larger value precedes it
    // and some smaller value follows it.
    const int n = p.size();
    int max_before = 0;
    std::vector<int> min_after(static_cast<size_t>(n) + 2, n + 1);
    for (int j = n - 1; j >= 1; --j)
        min_after[static_cast<size_t>(j)] =
            std::min(min_after[static_cast<size_t>(j) + 1], p.at(j + 1));
    for (int j = 1; j <= n; ++j) {
        if (max_before > p.at(j) && min_after[static_cast<size_t>(j)] < p.at(j))
            return false;
        max_before = std::max(max_before, p.at(j));
    }
    return true;
}

} // namespace bumpkit
