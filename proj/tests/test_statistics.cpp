#include <doctest.h>

#include <numeric>

#include "bumpkit/oracles.hpp"
#include "bumpkit/statistics.hpp"
#include "oracle_helpers.hpp"

using namespace bumpkit;

TEST_CASE("bump") {
    CHECK(bump(parse_permutation("475382691")) == 11);
    CHECK(bump(Permutation::identity(9)) == 0);
    CHECK(bump(parse_permutation("7654321")) == 21); // n(n-1)/2 for one column
    CHECK(bump(Permutation{}) == 0);
}

TEST_CASE("bump_from_shape") {
    CHECK(bump_from_shape(Partition({4, 2, 1, 1, 1})) == 11);
    CHECK(bump_from_shape(Partition({9})) == 0);
    CHECK(bump_from_shape(Partition({2, 2})) == 2);
    // row decomposition: sum over i of cells strictly below row i
    for (int n = 0; n <= 12; ++n)
        for_each_partition(n, [&](const std::vector<int>& parts) {
            long below_sum = 0;
            for (size_t i = 0; i + 1 < parts.size(); ++i)
                for (size_t j = i + 1; j < parts.size(); ++j) below_sum += parts[j];
            REQUIRE(bump_from_shape(Partition::unchecked(parts)) == below_sum);
        });
}

TEST_CASE("bump_sequence") {
    CHECK(bump_sequence(parse_permutation("475382691")).terms() ==
          std::vector<int>{0, 0, 1, 2, 0, 3, 1, 0, 4});
    CHECK(bump_sequence(parse_permutation("51324")).terms() ==
          std::vector<int>{0, 1, 0, 2, 0});
    CHECK(bump_sequence(Permutation::identity(4)).terms() == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("weak ballot validation") {
    CHECK_NOTHROW(WeakBallotSequence({0, 0, 1, 2, 0, 3, 1, 0, 4}));
    CHECK_NOTHROW(WeakBallotSequence({}));
    CHECK_THROWS_AS(WeakBallotSequence({1}), NotABallotSequence);
    CHECK_THROWS_AS(WeakBallotSequence({0, 1, 1}), NotABallotSequence);
    CHECK_THROWS_AS(WeakBallotSequence({0, 2}), NotABallotSequence);
    CHECK_THROWS_AS(WeakBallotSequence({0, -1}), NotABallotSequence);
}

TEST_CASE("ballot_to_permutation") {
    CHECK(ballot_to_permutation(WeakBallotSequence({0, 0, 0, 0})) == Permutation::identity(4));
    CHECK(ballot_to_permutation(WeakBallotSequence({0, 1, 2, 3})) ==
          parse_permutation("4321"));
    // all ballot sequences of length 4 give 10 distinct involutions
    std::vector<Permutation> images;
    for (const auto& b : enumerate_ballot_sequences(4)) {
        const auto p = ballot_to_permutation(b);
        CHECK(p == inverse(p));
        CHECK(bump_sequence(p) == b);
        images.push_back(p);
    }
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    CHECK(images.size() == 10);
}

TEST_CASE("ballot enumeration counts are the involution numbers") {
    CHECK(enumerate_ballot_sequences(1).size() == 1);
    const auto b3 = enumerate_ballot_sequences(3);
    REQUIRE(b3.size() == 4);
    CHECK(b3[0].terms() == std::vector<int>{0, 0, 0});
    CHECK(b3[1].terms() == std::vector<int>{0, 0, 1});
    CHECK(b3[2].terms() == std::vector<int>{0, 1, 0});
    CHECK(b3[3].terms() == std::vector<int>{0, 1, 2});
    for (int n = 0; n <= 8; ++n)
        CHECK(enumerate_ballot_sequences(n).size() ==
              static_cast<size_t>(testkit::involutions(n)));
    CHECK_THROWS_AS(enumerate_ballot_sequences(11), CapExceeded);
}

TEST_CASE("round trip over all ballot sequences up to length 7") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& b : enumerate_ballot_sequences(n))
            REQUIRE(bump_sequence(ballot_to_permutation(b)) == b);
}

TEST_CASE("every bump sequence is a weak ballot sequence") {
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            REQUIRE_NOTHROW(WeakBallotSequence(bump_sequence(p).terms()));
        });
}

TEST_CASE("alpha") {
    const auto p = parse_permutation("475382691");
    CHECK(alpha(p, 1) == 5);
    CHECK(alpha(p, 2) == 3);
    CHECK(alpha(p, 3) == 2);
    CHECK(alpha(p, 4) == 1);
    CHECK(alpha(p, 5) == 0);
    CHECK(alpha(p, 6) == 0); // beyond the row count
    CHECK(alpha_sequence(p) == std::vector<int>{5, 3, 2, 1, 0});
    for (int i = 1; i <= 4; ++i) CHECK(alpha(Permutation::identity(6), i) == 0);
    // sum of alphas is the bump statistic
    for_each_permutation(6, [](const Permutation& q) {
        long total = 0;
        for (int i = 1; i <= q.size(); ++i) total += alpha(q, i);
        REQUIRE(total == bump(q));
    });
}

TEST_CASE("weakbump") {
    CHECK(weakbump(parse_permutation("475382691")) == 5);
    CHECK(weakbump(Permutation::identity(7)) == 0);
    CHECK(weakbump(parse_permutation("314569278")) == 3);
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            int positive = 0;
            for (int b : bump_sequence(p).terms())
                if (b > 0) ++positive;
            REQUIRE(weakbump(p) == positive);
            REQUIRE(weakbump(p) == n - shape_of(p).part(1));
        });
}

TEST_CASE("bump equals weakbump exactly for 321-avoiding permutations") {
    for (int n = 0; n <= 8; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            if (avoids_321(p)) REQUIRE(bump(p) == weakbump(p));
        });
}

TEST_CASE("bump_i via Greene sums of prefix shapes") {
    const auto p = parse_permutation("475382691");
    CHECK(bump_i_minimality_check(p, 4) == 2);
    CHECK(bump_i_minimality_check(p, 1) == 0);
    for_each_permutation(5, [](const Permutation& q) {
        const auto bs = bump_sequence(q).terms();
        for (int i = 1; i <= q.size(); ++i)
            REQUIRE(bump_i_minimality_check(q, i) == bs[static_cast<size_t>(i) - 1]);
    });
}

TEST_CASE("bump is inverse-invariant") {
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            REQUIRE(bump(p) == bump(inverse(p)));
        });
}
