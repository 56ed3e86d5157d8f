// Connectivity predicates on bitmask graphs: BFS reachability, cut vertices
// via lowpoint DFS, 2-connectivity, biconnected blocks.  Vertex sets come
// back as VertexSet masks.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace cliquecycles {

// Vertices reachable from `start` inside `allowed` (start must be in allowed).
inline VertexSet reachable_within(const Graph& g, int start, VertexSet allowed) {
    VertexSet seen = bit(start) & allowed;
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (int v : bits{frontier}) next |= g.neighbors(v);
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    return reachable_within(g, 0, g.vertex_mask()) == g.vertex_mask();
}

namespace detail {

// Iterative lowpoint DFS with an explicit edge stack.  One pass yields cut
// vertices and the vertex sets of the biconnected components.
struct BlockDfs {
    const Graph& g;
    std::array<int, kMaxVertices> disc{};
    std::array<int, kMaxVertices> low{};
    std::array<int, kMaxVertices> parent{};
    VertexSet visited = 0;
    VertexSet cuts = 0;
    std::vector<VertexSet> blocks;
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    explicit BlockDfs(const Graph& graph) : g(graph) {
        disc.fill(-1);
        parent.fill(-1);
    }

    void pop_block(int p, int w) {
        VertexSet comp = 0;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            comp |= bit(a) | bit(b);
            if (a == p && b == w) break;
        }
        blocks.push_back(comp);
    }

    void run(int root) {
        struct Frame {
            int v;
            VertexSet pending;
        };
        std::vector<Frame> stack;
        int root_children = 0;
        disc[root] = low[root] = timer++;
        visited |= bit(root);
        stack.push_back({root, g.neighbors(root)});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.pending) {
                const int w = lowest(f.pending);
                f.pending &= f.pending - 1;
                if (disc[w] < 0) {
                    parent[w] = f.v;
                    if (f.v == root) ++root_children;
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    visited |= bit(w);
                    stack.push_back({w, g.neighbors(w) & ~bit(f.v)});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                const int w = f.v;
                stack.pop_back();
                const int p = parent[w];
                if (p < 0) continue;
                low[p] = std::min(low[p], low[w]);
                if (low[w] >= disc[p]) {
                    if (p != root) cuts |= bit(p);
                    pop_block(p, w);
                }
            }
        }
        if (root_children >= 2) cuts |= bit(root);
    }

    void run_all() {
        for (int v = 0; v < g.order(); ++v)
            if (!(visited & bit(v))) run(v);
    }
};

}  // namespace detail

// Cut vertices (articulation points) of g, over all components.
inline VertexSet cut_vertices(const Graph& g) {
    detail::BlockDfs dfs(g);
    dfs.run_all();
    return dfs.cuts;
}

// 2-connected: at least 3 vertices, connected, no cut vertex.
inline bool is_two_connected(const Graph& g) {
    if (g.order() < 3) return false;
    if (!is_connected(g)) return false;
    return cut_vertices(g) == 0;
}

// Vertex sets of the biconnected components.  Every edge lies in exactly one
// block; a bridge forms a 2-vertex block; isolated vertices appear nowhere.
inline std::vector<VertexSet> biconnected_blocks(const Graph& g) {
    detail::BlockDfs dfs(g);
    dfs.run_all();
    return dfs.blocks;
}

// Vertex set of the block containing the edge uv.  Every cycle through uv
// lies inside this set, so cycle searches may restrict to it.  Two blocks
// share at most one vertex, so the block holding both endpoints is unique.
inline VertexSet block_of_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("block_of_edge: uv is not an edge");
    const VertexSet uv = bit(u) | bit(v);
    for (VertexSet blk : biconnected_blocks(g))
        if ((blk & uv) == uv) return blk;
    throw std::logic_error("block_of_edge: edge missing from block decomposition");
}

// True iff removing both x and y disconnects the rest of the graph.
inline bool is_pair_cut(const Graph& g, int x, int y) {
    const VertexSet rest = g.vertex_mask() & ~bit(x) & ~bit(y);
    if (popcount(rest) < 2) return false;
    return reachable_within(g, lowest(rest), rest) != rest;
}

// An edge xy whose endpoints form a separating pair, in lexicographic order.
inline std::optional<std::pair<int, int>> find_adjacent_two_cut(const Graph& g) {
    const int n = g.order();
    if (n < 4) return std::nullopt;
    for (int x = 0; x < n; ++x)
        for (int y : bits{g.neighbors(x) & ~(bit(x) | (bit(x) - 1))})
            if (is_pair_cut(g, x, y)) return std::make_pair(x, y);
    return std::nullopt;
}

}  // namespace cliquecycles
