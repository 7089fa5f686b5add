#include "bumpkit/bump_diagram.hpp"

#include <algorithm>
#include <sstream>

namespace bumpkit {

std::vector<int> BumpDiagram::top_reading() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n_));
    for (int x = 1; x <= n_; ++x) out.push_back(h_edge(x, n_));
    return out;
}

std::vector<int> BumpDiagram::right_reading() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n_));
    for (int y = 1; y <= n_; ++y) out.push_back(v_edge(n_, y));
    return out;
}

BumpDiagram build_bump_diagram(const Permutation& p) {
    const int n = p.size();
    BumpDiagram d(n);
    for (int i = 1; i <= n; ++i) d.set_fill(i, p.at(i), 0);

    constexpr int none = BumpDiagram::kNoLabel;
    for (int y = 1; y <= n; ++y) {
        for (int x = 1; x <= n; ++x) {
            const int left = (x > 1) ? d.v_edge(x - 1, y) : none;
            const int bottom = (y > 1) ? d.h_edge(x, y - 1) : none;
            int fill = d.fill(x, y);
            if (fill != none) {
                // Seed cell. The rules give its in-edges no meaning; the
                // inductive argument says they never carry labels.
                if (left != none || bottom != none)
                    throw InternalError("seed cell (" + std::to_string(x) + "," +
                                        std::to_string(y) + ") of " + p.to_string() +
                                        " has an incoming edge label");
            } else if (left != none && left == bottom) {
                // Rule 1
                fill = left + 1;
                d.set_fill(x, y, fill);
            }
            if (fill != none) {
                // Rule 2
                d.set_h_edge(x, y, fill);
                d.set_v_edge(x, y, fill);
            } else {
                // Rules 3a/3b; both fire when both labels are present.
                if (left != none) d.set_v_edge(x, y, left);
                if (bottom != none) d.set_h_edge(x, y, bottom);
            }
        }
    }
    return d;
}

std::vector<int> bump_sequence_via_diagram(const Permutation& p) {
    return build_bump_diagram(p).top_reading();
}

namespace {

std::string centered(const std::string& s, int width, char pad) {
    const int total = width - static_cast<int>(s.size());
    if (total <= 0) return s;
    const int before = total / 2;
    return std::string(static_cast<size_t>(before), pad) + s +
           std::string(static_cast<size_t>(total - before), pad);
}

std::string label_str(int v) {
    return v == BumpDiagram::kNoLabel ? "" : std::to_string(v);
}

} // namespace

std::string render_diagram_ascii(const BumpDiagram& d) {
    const int n = d.n();
    if (n == 0) return "(empty)\n";
    int lw = 1; // widest label; labels are bounded by n-1
    for (int v = n - 1; v >= 10; v /= 10) ++lw;
    const int cw = lw + 2; // cell interior width

    std::ostringstream os;
    // Rows printed top (y = n) to bottom. The line above display-row y carries
    // the top edges h_edge(x, y); the line below the last row is the grid
    // boundary, always blank.
    for (int y = n; y >= 1; --y) {
        for (int x = 1; x <= n; ++x)
            os << '+' << centered(label_str(d.h_edge(x, y)), cw, '-');
        os << "+\n";
        for (int x = 1; x <= n; ++x) {
            os << (x == 1 ? "|" : "") << centered(label_str(d.fill(x, y)), cw, ' ');
            const std::string v = label_str(d.v_edge(x, y));
            os << (v.empty() ? "|" : v);
        }
        os << '\n';
    }
    for (int x = 1; x <= n; ++x) os << '+' << std::string(static_cast<size_t>(cw), '-');
    os << "+\n";
    return os.str();
}

std::string render_diagram_svg(const BumpDiagram& d) {
    const int n = d.n();
    const int pitch = 32;
    const int margin = pitch;
    const int side = 2 * margin + n * pitch;
    // Cell (x,y) occupies a square; y up in the lattice, down in SVG.
    const auto X = [&](double x) { return margin + (x - 1) * pitch; };
    const auto Y = [&](double y) { return side - margin - y * pitch; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side
        << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
    svg << "<!-- bump diagram; cell pitch " << pitch
        << "px; cell fills centered, edge labels on their edges -->\n";
    for (int i = 0; i <= n; ++i) {
        svg << "<line x1=\"" << X(1 + i) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(1 + i)
            << "\" y2=\"" << Y(n) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        svg << "<line x1=\"" << X(1) << "\" y1=\"" << Y(i) << "\" x2=\"" << X(1 + n)
            << "\" y2=\"" << Y(i) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
    const auto text = [&](double x, double y, int value, const char* color) {
        svg << "<text x=\"" << x << "\" y=\"" << y
            << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" "
               "dominant-baseline=\"middle\" fill=\""
            << color << "\">" << value << "</text>\n";
    };
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x) {
            if (d.fill(x, y) != BumpDiagram::kNoLabel)
                text(X(x + 0.5), Y(y - 0.5), d.fill(x, y), "#000000");
            if (d.h_edge(x, y) != BumpDiagram::kNoLabel)
                text(X(x + 0.5), Y(static_cast<double>(y)), d.h_edge(x, y), "#377eb8");
            if (d.v_edge(x, y) != BumpDiagram::kNoLabel)
                text(X(x + 1.0), Y(y - 0.5), d.v_edge(x, y), "#e41a1c");
        }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace bumpkit
