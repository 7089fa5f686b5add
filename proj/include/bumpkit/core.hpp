#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bumpkit/bigint.hpp"
#include "bumpkit/errors.hpp"

namespace bumpkit {

// All public indexing is 1-based: positions, values, rows, columns.

// Default cap for exhaustive enumeration of S_n (n! streams).
inline constexpr int kExhaustiveCap = 10;

// A permutation of {1..n} in one-line notation. n == 0 is legal.
class Permutation {
public:
    Permutation() = default;
    // Validates that word is a bijection on {1..n}; throws NotAPermutation.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    // No validation; word must already be a bijection on {1..n}.
    static Permutation unchecked(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    // Value at 1-based position i.
    int at(int i) const { return word_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& word() const { return word_; }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

    std::string to_string() const; // space-separated one-line word

private:
    std::vector<int> word_;
};

// An integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default; // empty partition of 0
    // Validates positivity and weak decrease.
    explicit Partition(std::vector<int> parts);

    static Partition unchecked(std::vector<int> parts);

    // |lambda| = sum of parts.
    int size() const { return size_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    // 1-based part access; 0 beyond the last part.
    int part(int i) const {
        return (i >= 1 && i <= num_parts()) ? parts_[static_cast<size_t>(i) - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const; // "(4,2,1,1,1)"

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// 1-based cell coordinates: row 1 is the top row, col 1 the leftmost column.
struct Cell {
    int row = 1;
    int col = 1;
};

// Rows of strictly increasing distinct integers, row lengths weakly
// decreasing, columns strictly increasing. "Standard" additionally means the
// entries are exactly {1..n}; insertion intermediates may use any distinct
// alphabet, so that stronger check is applied only where required
// (is_standard / rs boundaries).
class StandardTableau {
public:
    StandardTableau() = default;
    // Validates the structural invariants above; throws NotStandard.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    static StandardTableau unchecked(std::vector<std::vector<int>> rows);

    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_entries() const;
    const std::vector<int>& row(int r) const { return rows_[static_cast<size_t>(r) - 1]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;

    // True iff entries are exactly {1..n}.
    bool is_standard() const;
    bool contains(int value) const;

    bool operator==(const StandardTableau&) const = default;

    std::string to_string() const; // one row per line

private:
    std::vector<std::vector<int>> rows_;
};

// --- core operations ---------------------------------------------------

// Accepts whitespace/comma-separated integers, or a contiguous digit string
// (digit strings only for n <= 9; multi-digit values need separators).
Permutation parse_permutation(const std::string& text);

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);

Partition conjugate(const Partition& lambda);

// 1 + cells below + cells to the right. Throws CellOutsideShape.
int hook_length(const Partition& lambda, Cell c);

// Number of standard Young tableaux of shape lambda, by the hook length
// formula n!/prod h(c). Division is checked exact.
Bigint count_syt(const Partition& lambda);

// Partitions of n in reverse-lexicographic order (largest part first):
// (4),(3,1),(2,2),(2,1,1),(1,1,1,1) for n=4.
std::vector<Partition> partitions_of(int n);
// Streaming form; parts buffer is reused between calls.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn);
// Partitions of n whose parts are all <= max_part, same order.
void for_each_partition_max_part(int n, int max_part,
                                 const std::function<void(const std::vector<int>&)>& fn);

// All n! permutations in lexicographic order. Throws CapExceeded beyond cap.
std::vector<Permutation> permutations_of(int n, int cap = kExhaustiveCap);
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          int cap = kExhaustiveCap);

// {i : p_i > p_{i+1}}, ascending.
std::vector<int> descent_set(const Permutation& p);

// True iff no i<j<k with p_i > p_j > p_k.
bool avoids_321(const Permutation& p);

} // namespace bumpkit
