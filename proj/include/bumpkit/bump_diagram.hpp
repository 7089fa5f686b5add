#pragma once

#include <string>
#include <vector>

#include "bumpkit/core.hpp"

namespace bumpkit {

// n x n grid of cells addressed (x, y) in Cartesian coordinates, 1-based:
// x = column (rightward), y = row (upward). Every edge belongs to exactly one
// cell as its top or right edge; grid-boundary left/bottom edges are always
// unlabeled. kNoLabel marks absence (labels themselves start at 0).
class BumpDiagram {
public:
    static constexpr int kNoLabel = -1;

    BumpDiagram() = default;
    explicit BumpDiagram(int n)
        : n_(n),
          cell_fill_(static_cast<size_t>(n) * n, kNoLabel),
          h_edge_(static_cast<size_t>(n) * n, kNoLabel),
          v_edge_(static_cast<size_t>(n) * n, kNoLabel) {}

    int n() const { return n_; }
    int fill(int x, int y) const { return cell_fill_[idx(x, y)]; }
    // Label on the top edge of cell (x,y).
    int h_edge(int x, int y) const { return h_edge_[idx(x, y)]; }
    // Label on the right edge of cell (x,y).
    int v_edge(int x, int y) const { return v_edge_[idx(x, y)]; }

    // Top-edge labels of row n, x = 1..n: the bump sequence.
    std::vector<int> top_reading() const;
    // Right-edge labels of column n, y = 1..n (bottom to top): the bump
    // sequence of the inverse permutation.
    std::vector<int> right_reading() const;

    void set_fill(int x, int y, int v) { cell_fill_[idx(x, y)] = v; }
    void set_h_edge(int x, int y, int v) { h_edge_[idx(x, y)] = v; }
    void set_v_edge(int x, int y, int v) { v_edge_[idx(x, y)] = v; }

private:
    size_t idx(int x, int y) const {
        return static_cast<size_t>(y - 1) * static_cast<size_t>(n_) +
               static_cast<size_t>(x - 1);
    }

    int n_ = 0;
    std::vector<int> cell_fill_, h_edge_, v_edge_;
};

// Seed cells (i, p_i) with 0, then propagate bottom row to top, left to right
// within a row, by the five local rules. Throws InternalError if a seed cell
// ever receives an incoming edge label (never observed; asserted rather than
// given a precedence semantics).
BumpDiagram build_bump_diagram(const Permutation& p);

// top_reading of the built diagram; equals rs(p).bump_sequence.
std::vector<int> bump_sequence_via_diagram(const Permutation& p);

// Fixed-width ASCII rendering of fills and all edge labels.
std::string render_diagram_ascii(const BumpDiagram& d);

// SVG rendering sharing the shadow renderer's conventions.
std::string render_diagram_svg(const BumpDiagram& d);

} // namespace bumpkit
