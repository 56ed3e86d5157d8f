// Labeled graph enumeration over the upper-triangle edge counter.  Code bit
// p corresponds to the p-th pair in the order (0,1),(0,2),(1,2),(0,3),...,
// the same pair order graph6 uses for its body bits.

#pragma once

#include <cstdint>
#include <utility>

#include "connectivity.hpp"
#include "graph.hpp"

namespace cliquecycles {

inline constexpr int kEnumMaxVertices = 8;

enum class GraphFilter { none, connected, two_connected };

inline std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > kEnumMaxVertices) throw std::invalid_argument("labeled_graph_count: n out of [1, 8]");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline Graph graph_from_code(int n, std::uint64_t code) {
    if (n < 1 || n > kEnumMaxVertices) throw std::invalid_argument("graph_from_code: n out of [1, 8]");
    if (code >= labeled_graph_count(n)) throw std::invalid_argument("graph_from_code: code out of range");
    std::array<VertexSet, kMaxVertices> rows{};
    int p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if ((code >> p) & 1) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
    return Graph::from_rows(n, rows);
}

inline std::uint64_t code_from_graph(const Graph& g) {
    if (g.order() > kEnumMaxVertices) throw std::invalid_argument("code_from_graph: n > 8");
    std::uint64_t code = 0;
    int p = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i, ++p)
            if (g.has_edge(i, j)) code |= std::uint64_t{1} << p;
    return code;
}

inline bool passes_filter(const Graph& g, GraphFilter f) {
    switch (f) {
        case GraphFilter::none: return true;
        case GraphFilter::connected: return is_connected(g);
        case GraphFilter::two_connected: return is_two_connected(g);
    }
    return false;
}

// Visits codes [lo, hi) in ascending order; fn sees only graphs passing the
// filter.  Returns the number of graphs yielded.
template <typename Fn>
std::uint64_t enumerate_graphs_range(int n, GraphFilter filter, std::uint64_t lo, std::uint64_t hi,
                                     Fn&& fn) {
    const std::uint64_t total = labeled_graph_count(n);
    if (lo > hi || hi > total) throw std::invalid_argument("enumerate_graphs_range: bad range");
    std::uint64_t yielded = 0;
    for (std::uint64_t code = lo; code < hi; ++code) {
        Graph g = graph_from_code(n, code);
        if (!passes_filter(g, filter)) continue;
        ++yielded;
        fn(g);
    }
    return yielded;
}

template <typename Fn>
std::uint64_t enumerate_graphs(int n, GraphFilter filter, Fn&& fn) {
    return enumerate_graphs_range(n, filter, 0, labeled_graph_count(n), std::forward<Fn>(fn));
}

}  // namespace cliquecycles
