// Builders for the three extremal families.  Vertex numbering is fixed so
// graph6 output and witnesses are reproducible: part A first, then the B
// blocks left to right, then C.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"

namespace cliquecycles {

struct ConstructionSpec {
    char family = 0;  // 'H', 'X', 'Q'
    int n = 0;
    int k = 0;
    int a = 0;  // H only
    VertexSet part_a = 0;
    VertexSet part_b = 0;
    VertexSet part_c = 0;
    std::vector<VertexSet> b_blocks;                // the disjoint cliques inside B (X, Q)
    std::optional<std::pair<int, int>> edge;        // designated edge (X)
    std::optional<int> hub;                         // hub vertex (Q)
};

namespace detail {

inline void add_clique(std::vector<std::pair<int, int>>& edges, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j) edges.emplace_back(i, j);
}

inline void add_join(std::vector<std::pair<int, int>>& edges, int alo, int ahi, int blo, int bhi) {
    for (int i = alo; i < ahi; ++i)
        for (int j = blo; j < bhi; ++j) edges.emplace_back(i, j);
}

inline VertexSet range_mask(int lo, int hi) {
    VertexSet m = 0;
    for (int i = lo; i < hi; ++i) m |= bit(i);
    return m;
}

}  // namespace detail

// A of size a, B of size n-k+a, C of size k-2a; A∪C complete, A joined to B.
inline std::pair<Graph, ConstructionSpec> build_H(int n, int k, int a) {
    if (!(n >= k && k >= 4)) throw std::invalid_argument("build_H: need n >= k >= 4");
    if (!(a >= 1 && 2 * a < k)) throw std::invalid_argument("build_H: need 1 <= a < k/2");
    if (n > kMaxVertices) throw std::invalid_argument("build_H: n > 62");
    const int b_lo = a, b_hi = a + (n - k + a);
    const int c_lo = b_hi, c_hi = n;
    std::vector<std::pair<int, int>> edges;
    detail::add_clique(edges, 0, a);
    detail::add_clique(edges, c_lo, c_hi);
    detail::add_join(edges, 0, a, c_lo, c_hi);
    detail::add_join(edges, 0, a, b_lo, b_hi);
    ConstructionSpec spec;
    spec.family = 'H';
    spec.n = n;
    spec.k = k;
    spec.a = a;
    spec.part_a = detail::range_mask(0, a);
    spec.part_b = detail::range_mask(b_lo, b_hi);
    spec.part_c = detail::range_mask(c_lo, c_hi);
    return {Graph(n, edges), std::move(spec)};
}

// Edge uv = (0,1) joined to r disjoint (k-3)-cliques and one t-clique.
inline std::pair<Graph, ConstructionSpec> build_X(int n, int k) {
    if (n < 3) throw std::invalid_argument("build_X: n < 3");
    if (k < 4) throw std::invalid_argument("build_X: k < 4");
    if (n > kMaxVertices) throw std::invalid_argument("build_X: n > 62");
    const Decomposition d = decompose(n, k, DecomposeMode::g);
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(0, 1);
    ConstructionSpec spec;
    spec.family = 'X';
    spec.n = n;
    spec.k = k;
    spec.part_a = detail::range_mask(0, 2);
    spec.edge = {0, 1};
    int pos = 2;
    for (int block = 0; block < d.r; ++block) {
        detail::add_clique(edges, pos, pos + k - 3);
        spec.b_blocks.push_back(detail::range_mask(pos, pos + k - 3));
        pos += k - 3;
    }
    spec.part_b = detail::range_mask(2, pos);
    detail::add_clique(edges, pos, n);
    spec.part_c = detail::range_mask(pos, n);
    detail::add_join(edges, 0, 2, 2, n);
    return {Graph(n, edges), std::move(spec)};
}

// Hub w = 0 joined to r disjoint (k-2)-cliques and one t-clique.
inline std::pair<Graph, ConstructionSpec> build_Q(int n, int k) {
    if (n < 2) throw std::invalid_argument("build_Q: n < 2");
    if (k < 4) throw std::invalid_argument("build_Q: k < 4");
    if (n > kMaxVertices) throw std::invalid_argument("build_Q: n > 62");
    const Decomposition d = decompose(n, k, DecomposeMode::psi);
    std::vector<std::pair<int, int>> edges;
    ConstructionSpec spec;
    spec.family = 'Q';
    spec.n = n;
    spec.k = k;
    spec.part_a = bit(0);
    spec.hub = 0;
    int pos = 1;
    for (int block = 0; block < d.r; ++block) {
        detail::add_clique(edges, pos, pos + k - 2);
        spec.b_blocks.push_back(detail::range_mask(pos, pos + k - 2));
        pos += k - 2;
    }
    spec.part_b = detail::range_mask(1, pos);
    detail::add_clique(edges, pos, n);
    spec.part_c = detail::range_mask(pos, n);
    detail::add_join(edges, 0, 1, 1, n);
    return {Graph(n, edges), std::move(spec)};
}

}  // namespace cliquecycles
