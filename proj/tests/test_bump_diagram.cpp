#include <doctest.h>

#include <algorithm>

#include "bumpkit/bump_diagram.hpp"
#include "bumpkit/rs.hpp"

using namespace bumpkit;

TEST_CASE("readings of the two worked diagrams") {
    {
        const auto d = build_bump_diagram(parse_permutation("51324"));
        CHECK(d.top_reading() == std::vector<int>{0, 1, 0, 2, 0});
        CHECK(d.right_reading() == std::vector<int>{0, 0, 1, 0, 2}); // sigma^-1 = 24351
    }
    {
        const auto d = build_bump_diagram(parse_permutation("475382691"));
        CHECK(d.top_reading() == std::vector<int>{0, 0, 1, 2, 0, 3, 1, 0, 4});
        CHECK(d.right_reading() == std::vector<int>{0, 1, 2, 3, 0, 0, 4, 1, 0}); // pi^-1
    }
}

TEST_CASE("bump_sequence_via_diagram") {
    auto seq = bump_sequence_via_diagram(parse_permutation("51324"));
    CHECK(seq == std::vector<int>{0, 1, 0, 2, 0});
    long total = 0;
    for (int v : seq) total += v;
    CHECK(total == 3);
    CHECK(bump_sequence_via_diagram(Permutation::identity(5)) == std::vector<int>(5, 0));
}

TEST_CASE("diagram agrees with the insertion engine exhaustively") {
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            const auto d = build_bump_diagram(p);
            REQUIRE(d.top_reading() == rs(p).bump_sequence);
            REQUIRE(d.right_reading() == rs(inverse(p)).bump_sequence);
        });
}

TEST_CASE("top and right readings agree as multisets") {
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            const auto d = build_bump_diagram(p);
            auto top = d.top_reading(), right = d.right_reading();
            std::sort(top.begin(), top.end());
            std::sort(right.begin(), right.end());
            REQUIRE(top == right);
        });
}

TEST_CASE("the diagram of the inverse is the diagonal reflection") {
    for_each_permutation(5, [](const Permutation& p) {
        const auto d = build_bump_diagram(p);
        const auto di = build_bump_diagram(inverse(p));
        REQUIRE(di.top_reading() == d.right_reading());
        REQUIRE(di.right_reading() == d.top_reading());
        for (int x = 1; x <= p.size(); ++x)
            for (int y = 1; y <= p.size(); ++y) REQUIRE(di.fill(x, y) == d.fill(y, x));
    });
}

TEST_CASE("right edge plus one is the P row of that value") {
    for_each_permutation(6, [](const Permutation& p) {
        const auto d = build_bump_diagram(p);
        const auto P = rs(p).P;
        for (int v = 1; v <= p.size(); ++v) {
            int row = 0;
            for (int r = 1; r <= P.num_rows(); ++r) {
                const auto& cells = P.row(r);
                if (std::find(cells.begin(), cells.end(), v) != cells.end()) row = r;
            }
            REQUIRE(d.v_edge(p.size(), v) + 1 == row);
        }
    });
}

TEST_CASE("ascii rendering") {
    const auto one = render_diagram_ascii(build_bump_diagram(parse_permutation("1")));
    CHECK(one == "+-0-+\n| 0 0\n+---+\n");
    const auto d = build_bump_diagram(parse_permutation("51324"));
    CHECK(render_diagram_ascii(d) == render_diagram_ascii(d));
    // top labels appear in the first line
    CHECK(render_diagram_ascii(d).substr(0, 21) == "+-0-+-1-+-0-+-2-+-0-+");
}

TEST_CASE("svg rendering is deterministic") {
    const auto d = build_bump_diagram(parse_permutation("475382691"));
    CHECK(render_diagram_svg(d) == render_diagram_svg(d));
    CHECK(render_diagram_svg(d).find("<svg xmlns=") == 0);
}
