#pragma once

#include <string>
#include <vector>

#include "bumpkit/core.hpp"

namespace bumpkit {

// Lattice point in Cartesian coordinates: x = position (rightward),
// y = value (upward), both 1-based.
struct Point {
    int x = 0;
    int y = 0;
    bool operator==(const Point&) const = default;
};

// One shadow depth. Each line is the dot sequence of a staircase path,
// ordered by increasing x (y strictly decreasing along it).
struct ShadowLevel {
    int index = 1;
    std::vector<std::vector<Point>> lines;
    std::vector<int> exit_rows_y;         // right-side exits; row `index` of P
    std::vector<int> exit_cols_x;         // top exits; row `index` of Q
    std::vector<Point> intermediate_points; // corners that were not dots
};

struct ShadowDiagram {
    int n = 0;
    std::vector<ShadowLevel> levels; // until no dots remain
};

// Iterated shadow construction on Graph(p) = {(i, p_i)}. Level k's dots are
// level k-1's intermediate points.
ShadowDiagram shadow_diagram(const Permutation& p);

// Total intermediate points over all levels; equals bump(p).
long bump_via_shadows(const Permutation& p);

// Per-level intermediate counts (alpha_i), trailing zeros trimmed.
std::vector<int> intermediate_count_per_level(const Permutation& p);

struct SvgOptions {
    int cell_pitch = 32; // px per lattice unit
};

// Deterministic SVG: grid, solid input dots, one staircase polyline per
// shadow line (palette cycles by level), hollow markers on intermediates.
std::string render_shadows_svg(const ShadowDiagram& d, const SvgOptions& opts = {});

} // namespace bumpkit
