#include "psdrank/support_graph.hpp"

#include "psdrank/errors.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace psdrank {

SupportGraph SupportGraph::build(const RatMatrix& m) {
    SupportGraph g;
    g.row_count = m.rows();
    g.col_count = m.cols();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) g.edges.push_back({i, j});

    std::vector<std::vector<std::size_t>> row_adj(g.row_count), col_adj(g.col_count);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        row_adj[g.edges[e].row].push_back(e);
        col_adj[g.edges[e].col].push_back(e);
    }

    g.row_component.assign(g.row_count, 0);
    g.col_component.assign(g.col_count, 0);
    g.row_parent.assign(g.row_count, std::nullopt);
    g.col_parent.assign(g.col_count, std::nullopt);
    std::vector<bool> row_seen(g.row_count, false), col_seen(g.col_count, false);
    std::vector<bool> edge_in_tree(g.edges.size(), false);

    auto bfs = [&](bool root_is_row, std::size_t root, std::size_t component) {
        std::deque<std::pair<bool, std::size_t>> queue{{root_is_row, root}};
        (root_is_row ? row_seen : col_seen)[root] = true;
        (root_is_row ? g.row_component : g.col_component)[root] = component;
        while (!queue.empty()) {
            const auto [is_row, idx] = queue.front();
            queue.pop_front();
            g.bfs_order.emplace_back(is_row, idx);
            for (std::size_t e : is_row ? row_adj[idx] : col_adj[idx]) {
                const std::size_t other = is_row ? g.edges[e].col : g.edges[e].row;
                auto& seen = is_row ? col_seen : row_seen;
                if (seen[other]) continue;
                seen[other] = true;
                (is_row ? g.col_component : g.row_component)[other] = component;
                (is_row ? g.col_parent : g.row_parent)[other] = e;
                edge_in_tree[e] = true;
                queue.emplace_back(!is_row, other);
            }
        }
    };

    for (std::size_t r = 0; r < g.row_count; ++r)
        if (!row_seen[r]) bfs(true, r, g.component_count++);
    for (std::size_t c = 0; c < g.col_count; ++c)
        if (!col_seen[c]) bfs(false, c, g.component_count++);

    for (std::size_t e = 0; e < g.edges.size(); ++e)
        (edge_in_tree[e] ? g.tree_edges : g.non_tree_edges).push_back(e);
    return g;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> SupportGraph::fundamental_cycle(
    std::size_t edge_index) const {
    const SupportEdge closing = edges[edge_index];

    // Walk each endpoint up to its root; nodes are (is_row, index) pairs.
    auto ancestors = [&](bool is_row, std::size_t idx) {
        std::vector<std::pair<bool, std::size_t>> path{{is_row, idx}};
        bool at_row = is_row;
        std::size_t at = idx;
        while (true) {
            const auto& parent = at_row ? row_parent[at] : col_parent[at];
            if (!parent) break;
            const SupportEdge pe = edges[*parent];
            at = at_row ? pe.col : pe.row;
            at_row = !at_row;
            path.emplace_back(at_row, at);
        }
        return path;
    };

    const auto row_path = ancestors(true, closing.row);
    const auto col_path = ancestors(false, closing.col);

    // Lowest common ancestor: first node of the row path that appears in the
    // column path.
    std::size_t lca_row_pos = row_path.size(), lca_col_pos = col_path.size();
    for (std::size_t i = 0; i < row_path.size() && lca_row_pos == row_path.size(); ++i) {
        for (std::size_t j = 0; j < col_path.size(); ++j) {
            if (row_path[i] == col_path[j]) {
                lca_row_pos = i;
                lca_col_pos = j;
                break;
            }
        }
    }
    assert(lca_row_pos < row_path.size());

    std::vector<std::pair<bool, std::size_t>> node_cycle(row_path.begin(),
                                                         row_path.begin() + lca_row_pos + 1);
    for (std::size_t j = lca_col_pos; j-- > 0;) node_cycle.push_back(col_path[j]);

    std::vector<std::size_t> rows, cols;
    for (std::size_t t = 0; t < node_cycle.size(); ++t) {
        const auto [is_row, idx] = node_cycle[t];
        assert(is_row == (t % 2 == 0));
        (is_row ? rows : cols).push_back(idx);
    }
    assert(rows.size() == cols.size() && rows.size() >= 2);
    return {rows, cols};
}

}  // namespace psdrank
