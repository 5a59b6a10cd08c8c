#pragma once

#include "psdrank/matrix.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace psdrank {

struct SupportEdge {
    std::size_t row, col;
};

/// Bipartite support graph of a matrix: one node per row and per column, one
/// edge per nonzero cell. Carries a BFS spanning forest built in
/// deterministic order (components rooted at the lowest unvisited row, then
/// column; neighbours visited by ascending index).
struct SupportGraph {
    std::size_t row_count = 0;
    std::size_t col_count = 0;
    std::vector<SupportEdge> edges;  // row-major order of the support

    std::size_t component_count = 0;  // isolated rows/columns count as components
    std::vector<std::size_t> row_component, col_component;

    // Edge index linking each non-root node to its BFS parent.
    std::vector<std::optional<std::size_t>> row_parent, col_parent;

    std::vector<std::size_t> tree_edges, non_tree_edges;

    // Node visit order of the BFS, as (is_row, index) pairs; tree classes
    // propagate correctly when walked in this order.
    std::vector<std::pair<bool, std::size_t>> bfs_order;

    static SupportGraph build(const RatMatrix& m);

    /// The unique cycle closed by a non-tree edge, as alternating index lists
    /// (rows r_1..r_m, cols c_1..c_m): cells (r_t, c_t) and (r_{t+1}, c_t)
    /// are all in the support, indices cyclic.
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> fundamental_cycle(std::size_t edge_index) const;
};

}  // namespace psdrank
