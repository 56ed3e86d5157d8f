// Simple undirected graphs on up to 62 vertices, one 64-bit word per
// adjacency row.  Graph values are immutable after construction; the two
// transformations (contraction, edge-switching) return new values.
//
// Vertex labels are 0..n-1.  adj[i] is the neighborhood N(i) as a bit mask,
// so degree(i) = popcount(adj[i]) and adjacency tests are single-bit probes.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquecycles {

inline constexpr int kMaxVertices = 62;

using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet all_vertices(int n) {
    return n == 0 ? 0 : (~VertexSet{0} >> (64 - n));
}

inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

// Iterate set bits low to high: for (int v : bits(mask)) ...
struct bits {
    VertexSet mask;
    explicit bits(VertexSet m) : mask(m) {}
    struct iterator {
        VertexSet rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {mask}; }
    iterator end() const { return {0}; }
};

class Graph {
public:
    // Builds the graph with exactly the listed edges (duplicates collapse).
    Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("vertex count must be in [1, 62], got " + std::to_string(n));
        for (auto [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (a == b)
                throw std::invalid_argument("self-loop not allowed");
            adj_[a] |= bit(b);
            adj_[b] |= bit(a);
        }
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges)
        : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

    // Adopts prebuilt adjacency rows; validates symmetry, irreflexivity and
    // the absence of bits at positions >= n.
    static Graph from_rows(int n, const std::array<VertexSet, kMaxVertices>& rows) {
        Graph g(n);
        g.adj_ = rows;
        g.validate();
        return g;
    }

    static Graph empty(int n) { return Graph(n); }

    static Graph complete(int n) {
        Graph g(n);
        for (int v = 0; v < n; ++v) g.adj_[v] = all_vertices(n) & ~bit(v);
        return g;
    }

    static Graph cycle(int n) {
        Graph g(n);
        for (int v = 0; v < n; ++v) {
            g.adj_[v] |= bit((v + 1) % n);
            g.adj_[(v + 1) % n] |= bit(v);
        }
        return g;
    }

    int order() const { return n_; }
    VertexSet vertex_mask() const { return all_vertices(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighborhood(int v) const { return adj_[v] | bit(v); }
    int degree(int v) const { return popcount(adj_[v]); }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count());
        for (int v = 0; v < n_; ++v)
            for (int w : bits(adj_[v] & ~(bit(v + 1) - 1))) out.emplace_back(v, w);
        return out;
    }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

    void validate() const {
        for (int v = 0; v < n_; ++v) {
            if (adj_[v] & bit(v)) throw std::logic_error("adjacency row has a self-loop bit");
            if (adj_[v] & ~vertex_mask()) throw std::logic_error("adjacency bit beyond vertex count");
            for (int w : bits(adj_[v]))
                if (!(adj_[w] & bit(v))) throw std::logic_error("adjacency matrix not symmetric");
        }
    }

private:
    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("vertex count must be in [1, 62], got " + std::to_string(n));
    }

    int n_;
    std::array<VertexSet, kMaxVertices> adj_{};
};

inline Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
    return Graph(n, edges);
}

// Records the relabeling performed by a vertex-removing operation.
// to_new[v] is v's index in the new graph; survivors keep their relative
// order.  A contracted-away vertex maps to the image of the vertex it was
// merged into, never to "gone".
struct VertexMap {
    int old_n = 0;
    int new_n = 0;
    std::array<int, kMaxVertices> to_new{};
};

// G/uv: v is merged into u, parallel edges collapse, survivors are
// compact-relabeled in index order.
inline std::pair<Graph, VertexMap> contract(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract: uv is not an edge");
    const int n = g.order();
    VertexMap map;
    map.old_n = n;
    map.new_n = n - 1;
    int next = 0;
    for (int w = 0; w < n; ++w) map.to_new[w] = (w == v) ? -1 : next++;
    map.to_new[v] = map.to_new[u];

    std::array<VertexSet, kMaxVertices> rows{};
    for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        VertexSet old_row = (w == u) ? ((g.neighbors(u) | g.neighbors(v)) & ~(bit(u) | bit(v)))
                                     : (g.neighbors(w) & ~bit(v)) | (g.has_edge(w, v) && w != u ? bit(u) : 0);
        VertexSet row = 0;
        for (int x : bits(old_row)) row |= bit(map.to_new[x]);
        rows[map.to_new[w]] = row;
    }
    return {Graph::from_rows(n - 1, rows), map};
}

// G[v->u]: for every x in N(v) \ N[u], the edge vx is replaced by ux.
// Same vertex set; uv itself and every edge not incident to v are untouched.
inline Graph edge_switch(const Graph& g, int v, int u) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge_switch: uv is not an edge");
    VertexSet moved = g.neighbors(v) & ~g.closed_neighborhood(u);
    std::array<VertexSet, kMaxVertices> rows{};
    for (int w = 0; w < g.order(); ++w) rows[w] = g.neighbors(w);
    for (int x : bits(moved)) {
        rows[v] &= ~bit(x);
        rows[x] &= ~bit(v);
        rows[u] |= bit(x);
        rows[x] |= bit(u);
    }
    return Graph::from_rows(g.order(), rows);
}

}  // namespace cliquecycles
