// Clique counting: N_s(G) for all s at once via branch on the lowest
// candidate vertex.  Counts are kept in unsigned __int128 so dense graphs
// near n = 62 cannot overflow; every reachable value still fits in 64 bits
// (binom(62,31) < 2^63) and profile() narrows with a range check.

#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace cliquecycles {

using count_t = unsigned __int128;

struct CliqueProfile {
    int n = 0;
    std::array<count_t, kMaxVertices + 1> counts{};  // counts[s] = N_s

    count_t n_s(int s) const {
        if (s < 0) throw std::invalid_argument("n_s: negative s");
        if (s > kMaxVertices) return 0;
        return counts[s];
    }

    // Largest s with N_s > 0 (clique number; 0 for the empty vertex set).
    int clique_number() const {
        for (int s = n; s >= 1; --s)
            if (counts[s]) return s;
        return 0;
    }

    // counts[1..n] narrowed to uint64, for serialization.
    std::vector<std::uint64_t> to_u64() const {
        std::vector<std::uint64_t> out;
        out.reserve(n);
        for (int s = 1; s <= n; ++s) {
            if (counts[s] > ~std::uint64_t{0})
                throw std::overflow_error("clique profile value exceeds 64 bits");
            out.push_back(static_cast<std::uint64_t>(counts[s]));
        }
        return out;
    }

    bool operator==(const CliqueProfile&) const = default;
};

namespace detail {

// True iff p induces a complete subgraph.
inline bool is_clique(const Graph& g, VertexSet p) {
    for (int v : bits{p})
        if (p & ~g.closed_neighborhood(v)) return false;
    return true;
}

inline count_t binom_small(int a, int b) {
    if (b < 0 || b > a) return 0;
    count_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

// Each recursion level fixes the lowest remaining candidate in or out.
// depth = size of the clique built so far.  When the whole candidate set
// induces a clique every subset extends it, so binomials finish that branch.
template <bool Shortcut>
void count_extensions(const Graph& g, VertexSet cand, int depth,
                      std::array<count_t, kMaxVertices + 1>& counts) {
    if (!cand) return;
    if constexpr (Shortcut) {
        if (is_clique(g, cand)) {
            const int m = popcount(cand);
            for (int j = 1; j <= m; ++j) counts[depth + j] += binom_small(m, j);
            return;
        }
    }
    while (cand) {
        const int v = lowest(cand);
        cand &= cand - 1;
        counts[depth + 1] += 1;
        count_extensions<Shortcut>(g, cand & g.neighbors(v), depth + 1, counts);
    }
}

}  // namespace detail

inline CliqueProfile clique_profile(const Graph& g) {
    CliqueProfile p;
    p.n = g.order();
    p.counts[0] = 1;
    detail::count_extensions<true>(g, g.vertex_mask(), 0, p.counts);
    return p;
}

// Same recursion without the clique-closure shortcut; used to cross-check.
inline CliqueProfile clique_profile_plain(const Graph& g) {
    CliqueProfile p;
    p.n = g.order();
    p.counts[0] = 1;
    detail::count_extensions<false>(g, g.vertex_mask(), 0, p.counts);
    return p;
}

// N_s(G) alone, pruning branches that cannot reach size s.
inline count_t count_cliques(const Graph& g, int s) {
    if (s < 1 || s > g.order()) throw std::invalid_argument("count_cliques: s out of [1, n]");

    struct Rec {
        const Graph& g;
        int s;
        count_t total = 0;
        void go(VertexSet cand, int depth) {
            const int need = s - depth;
            if (popcount(cand) < need) return;
            if (need == 1) {
                total += popcount(cand);
                return;
            }
            if (detail::is_clique(g, cand)) {
                total += detail::binom_small(popcount(cand), need);
                return;
            }
            while (cand) {
                const int v = lowest(cand);
                cand &= cand - 1;
                go(cand & g.neighbors(v), depth + 1);
            }
        }
    } rec{g, s};
    rec.go(g.vertex_mask(), 0);
    return rec.total;
}

// Independent oracle: walk all 2^n subsets.  Only for n <= 20.
inline CliqueProfile brute_force_profile(const Graph& g) {
    if (g.order() > 20) throw std::invalid_argument("brute_force_profile: n > 20");
    CliqueProfile p;
    p.n = g.order();
    const VertexSet limit = VertexSet{1} << g.order();
    for (VertexSet sub = 0; sub < limit; ++sub)
        if (detail::is_clique(g, sub)) p.counts[popcount(sub)] += 1;
    return p;
}

}  // namespace cliquecycles
