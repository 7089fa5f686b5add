#include "bumpkit/viennot.hpp"

#include <algorithm>
#include <sstream>

namespace bumpkit {

namespace {

// Fixed palette, cycled by level index.
const char* const kPalette[8] = {"#000000", "#e41a1c", "#377eb8", "#4daf4a",
                                 "#984ea3", "#ff7f00", "#a65628", "#f781bf"};

// One sweep: split dots (sorted by x) into the staircase lines of this level.
// Equivalent to patience sorting into decreasing piles: a dot joins the first
// line whose current lowest y still lies above it; line bottoms stay sorted.
ShadowLevel build_level(int index, const std::vector<Point>& dots) {
    ShadowLevel level;
    level.index = index;
    std::vector<int> bottoms; // current last y per line, increasing
    for (const Point& d : dots) {
        auto it = std::upper_bound(bottoms.begin(), bottoms.end(), d.y);
        const size_t j = static_cast<size_t>(it - bottoms.begin());
        if (j == bottoms.size()) {
            bottoms.push_back(d.y);
            level.lines.emplace_back();
        } else {
            bottoms[j] = d.y;
        }
        level.lines[j].push_back(d);
    }
    for (const auto& line : level.lines) {
        level.exit_cols_x.push_back(line.front().x);
        for (size_t i = 1; i < line.size(); ++i)
            level.intermediate_points.push_back({line[i].x, line[i - 1].y});
    }
    level.exit_rows_y = bottoms; // already increasing
    std::sort(level.exit_cols_x.begin(), level.exit_cols_x.end());
    return level;
}

} // namespace

ShadowDiagram shadow_diagram(const Permutation& p) {
    ShadowDiagram d;
    d.n = p.size();
    std::vector<Point> dots;
    dots.reserve(static_cast<size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) dots.push_back({i, p.at(i)});
    int index = 1;
    while (!dots.empty()) {
        d.levels.push_back(build_level(index++, dots));
        dots = d.levels.back().intermediate_points;
        std::sort(dots.begin(), dots.end(),
                  [](const Point& a, const Point& b) { return a.x < b.x; });
    }
    return d;
}

long bump_via_shadows(const Permutation& p) {
    long total = 0;
    for (const auto& level : shadow_diagram(p).levels)
        total += static_cast<long>(level.intermediate_points.size());
    return total;
}

std::vector<int> intermediate_count_per_level(const Permutation& p) {
    std::vector<int> counts;
    for (const auto& level : shadow_diagram(p).levels)
        counts.push_back(static_cast<int>(level.intermediate_points.size()));
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

std::string render_shadows_svg(const ShadowDiagram& d, const SvgOptions& opts) {
    const int pitch = opts.cell_pitch;
    const int margin = pitch;
    const int n = d.n;
    const int side = 2 * margin + (n > 0 ? (n - 1) * pitch : 0);
    // y grows upward in the lattice, downward in SVG.
    const auto X = [&](int x) { return margin + (x - 1) * pitch; };
    const auto Y = [&](int y) { return side - margin - (y - 1) * pitch; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side
        << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
    svg << "<!-- shadow construction; cell pitch " << pitch
        << "px; level k lines use palette[(k-1) % 8] = black, red, blue, green, purple, "
           "orange, brown, pink; hollow circles mark intermediate points -->\n";
    for (int i = 1; i <= n; ++i) {
        svg << "<line x1=\"" << X(i) << "\" y1=\"" << Y(1) << "\" x2=\"" << X(i) << "\" y2=\""
            << Y(n) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<line x1=\"" << X(1) << "\" y1=\"" << Y(i) << "\" x2=\"" << X(n) << "\" y2=\""
            << Y(i) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
    for (const auto& level : d.levels) {
        const char* color = kPalette[(level.index - 1) % 8];
        for (const auto& line : level.lines) {
            // Staircase: enter from the top above the first dot, alternate
            // east/south through the corner points, exit east past the grid.
            svg << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"2\" points=\"";
            svg << X(line.front().x) << ',' << (Y(n) - margin / 2);
            for (size_t i = 0; i < line.size(); ++i) {
                svg << ' ' << X(line[i].x) << ',' << Y(line[i].y);
                if (i + 1 < line.size()) svg << ' ' << X(line[i + 1].x) << ',' << Y(line[i].y);
            }
            svg << ' ' << (X(n) + margin / 2) << ',' << Y(line.back().y);
            svg << "\"/>\n";
        }
    }
    if (!d.levels.empty()) {
        for (const auto& dot : d.levels.front().lines) {
            for (const Point& pt : dot)
                svg << "<circle cx=\"" << X(pt.x) << "\" cy=\"" << Y(pt.y)
                    << "\" r=\"4\" fill=\"#000000\"/>\n";
        }
        for (const auto& level : d.levels)
            for (const Point& pt : level.intermediate_points)
                svg << "<circle cx=\"" << X(pt.x) << "\" cy=\"" << Y(pt.y)
                    << "\" r=\"4\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace bumpkit
