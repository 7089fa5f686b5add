#include <doctest.h>

#include <numeric>

#include "bumpkit/rs.hpp"
#include "bumpkit/statistics.hpp"

using namespace bumpkit;

TEST_CASE("row insertion follows I1/I2") {
    {
        auto [t, trace] = insert(StandardTableau({{4, 7}}), 5);
        CHECK(t.rows() == std::vector<std::vector<int>>{{4, 5}, {7}});
        CHECK(trace.bumps == 1);
        CHECK(trace.final_row == 2);
        CHECK(trace.path == std::vector<std::pair<int, int>>{{1, 7}});
    }
    {
        auto [t, trace] = insert(StandardTableau({{4, 5}, {7}}), 3);
        CHECK(t.rows() == std::vector<std::vector<int>>{{3, 5}, {4}, {7}});
        CHECK(trace.bumps == 2);
        CHECK(trace.path == std::vector<std::pair<int, int>>{{1, 4}, {2, 7}});
    }
    {
        auto [t, trace] = insert(StandardTableau{}, 9);
        CHECK(t.rows() == std::vector<std::vector<int>>{{9}});
        CHECK(trace.bumps == 0);
        CHECK(trace.final_row == 1);
    }
    CHECK_THROWS_AS(insert(StandardTableau({{4, 7}}), 7), DuplicateEntry);
}

TEST_CASE("displaced values increase along the insertion path") {
    for_each_permutation(6, [](const Permutation& p) {
        StandardTableau t;
        for (int v : p.word()) {
            auto [next, trace] = insert(t, v);
            t = std::move(next);
            REQUIRE(trace.bumps == trace.final_row - 1);
            REQUIRE(static_cast<int>(trace.path.size()) == trace.bumps);
            for (size_t i = 1; i < trace.path.size(); ++i)
                REQUIRE(trace.path[i - 1].second < trace.path[i].second);
        }
    });
}

TEST_CASE("rs on the worked nine-element example") {
    const auto r = rs(parse_permutation("475382691"));
    CHECK(r.P.rows() == std::vector<std::vector<int>>{{1, 5, 6, 9}, {2, 8}, {3}, {4}, {7}});
    CHECK(r.Q.rows() == std::vector<std::vector<int>>{{1, 2, 5, 8}, {3, 7}, {4}, {6}, {9}});
    CHECK(r.bump_sequence == std::vector<int>{0, 0, 1, 2, 0, 3, 1, 0, 4});
    CHECK(r.P.shape() == Partition({4, 2, 1, 1, 1}));
    CHECK(r.P.is_standard());
    CHECK(r.Q.is_standard());
}

TEST_CASE("rs trivia") {
    const auto r = rs(Permutation::identity(6));
    CHECK(r.P.rows() == std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6}});
    CHECK(r.P == r.Q);
    CHECK(r.bump_sequence == std::vector<int>(6, 0));
    CHECK(rs(Permutation{}).bump_sequence.empty());
}

TEST_CASE("shape_of") {
    CHECK(shape_of(parse_permutation("475382691")) == Partition({4, 2, 1, 1, 1}));
    CHECK(shape_of(parse_permutation("654321")) == Partition({1, 1, 1, 1, 1, 1}));
    for_each_permutation(6, [](const Permutation& p) {
        REQUIRE(shape_of(p) == shape_of(inverse(p)));
    });
}

TEST_CASE("inverse_rs inverts rs") {
    const auto r = rs(parse_permutation("475382691"));
    CHECK(inverse_rs(r.P, r.Q) == parse_permutation("475382691"));
    const StandardTableau row({{1, 2, 3, 4}});
    CHECK(inverse_rs(row, row) == Permutation::identity(4));
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            const auto r = rs(p);
            REQUIRE(inverse_rs(r.P, r.Q) == p);
        });
}

TEST_CASE("inverse_rs validates input") {
    CHECK_THROWS_AS(inverse_rs(StandardTableau({{1, 2}}), StandardTableau({{1}, {2}})),
                    ShapeMismatch);
    CHECK_THROWS_AS(inverse_rs(StandardTableau({{4, 7}}), StandardTableau({{4, 7}})),
                    NotStandard);
}

TEST_CASE("equal-tableau pairs are exactly the involutions") {
    // P == Q forces pi == pi^-1; n=3 has 4 involutions from its 4 SYT
    int found = 0;
    for (int n : {3}) {
        for_each_permutation(n, [&](const Permutation& p) {
            const auto r = rs(p);
            if (r.P == r.Q) {
                REQUIRE(p == inverse(p));
                ++found;
            }
        });
    }
    CHECK(found == 4);
}

TEST_CASE("rs of the inverse swaps the pair") {
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            const auto r = rs(p);
            const auto ri = rs(inverse(p));
            REQUIRE(ri.P == r.Q);
            REQUIRE(ri.Q == r.P);
        });
}

TEST_CASE("bump sequence matches Q rows and the shape weighting") {
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            const auto r = rs(p);
            long total = std::accumulate(r.bump_sequence.begin(), r.bump_sequence.end(), 0l);
            REQUIRE(total == bump_from_shape(r.P.shape()));
            for (int i = 1; i <= n; ++i) {
                const int row = r.bump_sequence[static_cast<size_t>(i) - 1] + 1;
                const auto& q_row = r.Q.row(row);
                REQUIRE(std::find(q_row.begin(), q_row.end(), i) != q_row.end());
            }
        });
}

TEST_CASE("descents are exactly the strict rises of the bump sequence") {
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            const auto bs = rs(p).bump_sequence;
            std::vector<int> rises;
            for (int i = 1; i < n; ++i)
                if (bs[static_cast<size_t>(i) - 1] < bs[static_cast<size_t>(i)])
                    rises.push_back(i);
            REQUIRE(descent_set(p) == rises);
        });
}
