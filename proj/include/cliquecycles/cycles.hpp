// Longest-cycle and longest-path search.  Lengths count vertices (equal to
// edges on a cycle); a triangle has length 3.  Searches run on the
// biconnected block of the designated edge, compacted to local labels.
// Blocks of at most 16 vertices go through an exact subset DP; larger blocks
// fall back to budgeted branch and bound, and `exact` reports whether the
// search provably finished.

#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "connectivity.hpp"
#include "graph.hpp"

namespace cliquecycles {

inline constexpr int kDpMaxVertices = 16;
inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

struct CycleReport {
    int length = 0;            // vertices on the best cycle found, 0 = none
    bool exact = true;         // search finished, length is the true optimum
    std::vector<int> witness;  // vertex sequence, first vertex not repeated

    bool operator==(const CycleReport&) const = default;
};

namespace detail {

// Induced subgraph on `verts` relabeled to 0..b-1 in ascending vertex order.
struct Compact {
    int b = 0;
    std::array<int, kMaxVertices> to_local{};
    std::array<int, kMaxVertices> to_global{};
    std::array<std::uint64_t, kMaxVertices> adj{};
};

inline Compact compact_subgraph(const Graph& g, VertexSet verts) {
    Compact c;
    c.to_local.fill(-1);
    for (int v : bits{verts}) {
        c.to_local[v] = c.b;
        c.to_global[c.b] = v;
        ++c.b;
    }
    for (int i = 0; i < c.b; ++i) {
        std::uint64_t row = 0;
        for (int x : bits{g.neighbors(c.to_global[i]) & verts}) row |= bit(c.to_local[x]);
        c.adj[i] = row;
    }
    return c;
}

inline std::uint64_t span_mask(int b) { return b == 0 ? 0 : ~std::uint64_t{0} >> (64 - b); }

inline std::uint64_t local_reach(const std::array<std::uint64_t, kMaxVertices>& adj, int start,
                                 std::uint64_t allowed) {
    std::uint64_t seen = bit(start) & allowed;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v : bits{frontier}) next |= adj[v];
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

struct LocalPath {
    int length = 0;
    bool exact = true;
    std::vector<int> seq;  // local labels
};

// Exact longest src-dst path via reach[S] = endpoints of simple paths from
// src visiting exactly S.  Requires b <= kDpMaxVertices.
inline LocalPath longest_st_path_dp(const Compact& c, int src, int dst) {
    const std::size_t size = std::size_t{1} << c.b;
    std::vector<std::uint64_t> reach(size, 0);
    reach[bit(src)] = bit(src);
    int best = 0;
    std::uint64_t best_set = 0;
    for (std::uint64_t s = 1; s < size; ++s) {
        const std::uint64_t ends = reach[s];
        if (!ends) continue;
        if (ends & bit(dst)) {
            const int len = popcount(s);
            if (len > best) {
                best = len;
                best_set = s;
            }
        }
        for (int w : bits{ends}) {
            if (w == dst) continue;  // paths must end at dst, never pass through
            for (int x : bits{c.adj[w] & ~s}) reach[s | bit(x)] |= bit(x);
        }
    }
    LocalPath out;
    if (best < 2) return out;
    out.length = best;
    int cur = dst;
    std::uint64_t s = best_set;
    out.seq.push_back(cur);
    while (s != bit(src)) {
        const std::uint64_t preds = reach[s & ~bit(cur)] & c.adj[cur];
        s &= ~bit(cur);
        cur = lowest(preds);
        out.seq.push_back(cur);
    }
    std::reverse(out.seq.begin(), out.seq.end());
    return out;
}

// Budgeted DFS for longest src-dst path.  Prunes when dst is unreachable or
// the optimistic extension cannot beat the incumbent.  Budget counts node
// expansions; exhaustion clears `exact` and keeps the incumbent.
struct StPathBnB {
    const Compact& c;
    int dst;
    std::uint64_t budget;
    bool complete = true;
    int best = 0;
    std::vector<int> best_seq, cur_seq;

    void dfs(int w, std::uint64_t s) {
        if (budget == 0) {
            complete = false;
            return;
        }
        --budget;
        const std::uint64_t allowed = (span_mask(c.b) & ~s) | bit(w);
        const std::uint64_t reach = local_reach(c.adj, w, allowed);
        if (!(reach & bit(dst))) return;
        if (popcount(s) + popcount(reach & ~s) <= best) return;
        for (int x : bits{c.adj[w] & ~s}) {
            if (x == dst) {
                if (popcount(s) + 1 > best) {
                    best = popcount(s) + 1;
                    best_seq = cur_seq;
                    best_seq.push_back(dst);
                }
                continue;
            }
            cur_seq.push_back(x);
            dfs(x, s | bit(x));
            cur_seq.pop_back();
            if (!complete) return;
        }
    }

    LocalPath run(int src) {
        cur_seq = {src};
        dfs(src, bit(src));
        LocalPath out;
        out.length = best;
        out.exact = complete;
        out.seq = std::move(best_seq);
        return out;
    }
};

inline LocalPath longest_st_path(const Compact& c, int src, int dst, std::uint64_t budget) {
    if (c.b <= kDpMaxVertices) return longest_st_path_dp(c, src, dst);
    StPathBnB bnb{c, dst, budget, true, 0, {}, {}};
    return bnb.run(src);
}

// Longest cycle whose minimum local vertex is 0 after shifting: paths start
// at the anchor and close on any neighbor of it.  DP variant, b <= 16.
inline LocalPath best_anchored_cycle_dp(const std::array<std::uint64_t, kMaxVertices>& adj, int b,
                                        int floor_len) {
    const std::size_t size = std::size_t{1} << b;
    std::vector<std::uint64_t> reach(size, 0);
    reach[1] = 1;
    int best = 0;
    std::uint64_t best_set = 0;
    int best_end = -1;
    for (std::uint64_t s = 1; s < size; ++s) {
        const std::uint64_t ends = reach[s];
        if (!ends) continue;
        const int len = popcount(s);
        if (len >= 3 && len > std::max(best, floor_len)) {
            const std::uint64_t closing = ends & adj[0] & ~std::uint64_t{1};
            if (closing) {
                best = len;
                best_set = s;
                best_end = lowest(closing);
            }
        }
        for (int w : bits{ends})
            for (int x : bits{adj[w] & ~s}) reach[s | bit(x)] |= bit(x);
    }
    LocalPath out;
    if (best == 0) return out;
    out.length = best;
    int cur = best_end;
    std::uint64_t s = best_set;
    out.seq.push_back(cur);
    while (s != 1) {
        const std::uint64_t preds = reach[s & ~bit(cur)] & adj[cur];
        s &= ~bit(cur);
        cur = lowest(preds);
        out.seq.push_back(cur);
    }
    std::reverse(out.seq.begin(), out.seq.end());
    return out;
}

// Budgeted DFS for the anchored cycle search on blocks above the DP cut-off.
struct CycleBnB {
    const std::array<std::uint64_t, kMaxVertices>& adj;
    int b;
    std::uint64_t& budget;
    bool& complete;
    int best = 0;
    std::vector<int> best_seq, cur_seq;

    void dfs(int w, std::uint64_t s) {
        if (budget == 0) {
            complete = false;
            return;
        }
        --budget;
        const std::uint64_t allowed = (span_mask(b) & ~s) | bit(w);
        const std::uint64_t reach = local_reach(adj, w, allowed);
        if (!(reach & adj[0])) return;
        if (popcount(s) + popcount(reach & ~s) <= best) return;
        const int len = popcount(s);
        if (len >= 3 && len > best && (adj[w] & 1)) {
            best = len;
            best_seq = cur_seq;
        }
        for (int x : bits{adj[w] & ~s}) {
            cur_seq.push_back(x);
            dfs(x, s | bit(x));
            cur_seq.pop_back();
            if (!complete) return;
        }
    }

    void run() {
        cur_seq = {0};
        for (int x : bits{adj[0]}) {
            cur_seq.push_back(x);
            dfs(x, 1 | bit(x));
            cur_seq.pop_back();
            if (!complete) return;
        }
    }
};

// Longest cycle inside one compacted block.  Anchors each candidate cycle at
// its minimum vertex: anchor m sees only vertices >= m, shifted down by m.
inline LocalPath best_cycle_in_block(const Compact& c, int incumbent, std::uint64_t& budget) {
    LocalPath out;
    int best = 0;
    for (int m = 0; m + 3 <= c.b; ++m) {
        if (c.b - m <= std::max(best, incumbent)) break;
        std::array<std::uint64_t, kMaxVertices> shifted{};
        const int sb = c.b - m;
        for (int i = 0; i < sb; ++i) shifted[i] = c.adj[i + m] >> m;
        LocalPath found;
        if (sb <= kDpMaxVertices) {
            found = best_anchored_cycle_dp(shifted, sb, std::max(best, incumbent));
        } else {
            CycleBnB bnb{shifted, sb, budget, out.exact, std::max(best, incumbent), {}, {}};
            bnb.run();
            found.length = bnb.best;
            found.seq = std::move(bnb.best_seq);
        }
        if (found.length > best && found.length > incumbent) {
            best = found.length;
            out.length = best;
            out.seq.clear();
            out.seq.reserve(found.seq.size());
            for (int x : found.seq) out.seq.push_back(x + m);
        }
        if (!out.exact) break;
    }
    return out;
}

inline std::vector<int> to_global_seq(const Compact& c, const std::vector<int>& seq) {
    std::vector<int> out;
    out.reserve(seq.size());
    for (int x : seq) out.push_back(c.to_global[x]);
    return out;
}

}  // namespace detail

// c_uv: number of vertices on a longest cycle containing the edge uv, 0 if
// no cycle does.  Exact whenever the block of uv has at most 16 vertices.
inline CycleReport longest_cycle_through_edge(const Graph& g, int u, int v,
                                              std::uint64_t budget = kDefaultSearchBudget) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("longest_cycle_through_edge: uv is not an edge");
    const VertexSet blk = block_of_edge(g, u, v);
    CycleReport out;
    if (popcount(blk) < 3) return out;
    detail::Compact c = detail::compact_subgraph(g, blk);
    const int lu = c.to_local[u], lv = c.to_local[v];
    c.adj[lu] &= ~bit(lv);
    c.adj[lv] &= ~bit(lu);
    detail::LocalPath p = detail::longest_st_path(c, lu, lv, budget);
    out.exact = p.exact;
    if (p.length < 3) return out;
    out.length = p.length;
    out.witness = detail::to_global_seq(c, p.seq);
    return out;
}

// True iff some cycle through uv has at least k vertices.  Early-exit DFS
// with a memo of failed (visited-set, endpoint) states; always exact.
inline bool has_cycle_through_edge_at_least(const Graph& g, int u, int v, int k) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("has_cycle_through_edge_at_least: uv is not an edge");
    if (k < 3) throw std::invalid_argument("has_cycle_through_edge_at_least: k < 3");
    const VertexSet blk = block_of_edge(g, u, v);
    if (popcount(blk) < k) return false;
    detail::Compact c = detail::compact_subgraph(g, blk);
    const int lu = c.to_local[u], lv = c.to_local[v];
    c.adj[lu] &= ~bit(lv);
    c.adj[lv] &= ~bit(lu);

    struct Search {
        const detail::Compact& c;
        int dst, k;
        std::unordered_map<std::uint64_t, std::uint64_t> dead;

        bool go(int w, std::uint64_t s) {
            if (auto it = dead.find(s); it != dead.end() && (it->second & bit(w))) return false;
            const std::uint64_t allowed = (detail::span_mask(c.b) & ~s) | bit(w);
            const std::uint64_t reach = detail::local_reach(c.adj, w, allowed);
            if ((reach & bit(dst)) && popcount(s) + popcount(reach & ~s) >= k) {
                for (int x : bits{c.adj[w] & ~s}) {
                    if (x == dst) {
                        if (popcount(s) + 1 >= k) return true;
                        continue;
                    }
                    if (go(x, s | bit(x))) return true;
                }
            }
            dead[s] |= bit(w);
            return false;
        }
    } search{c, lv, k, {}};
    return search.go(lu, bit(lu));
}

// Length of a longest cycle in g, 0 for a forest.  Runs per biconnected
// block; exact when every searched block fits the DP cut-off.
inline CycleReport circumference(const Graph& g, std::uint64_t budget = kDefaultSearchBudget) {
    CycleReport out;
    std::vector<VertexSet> blks = biconnected_blocks(g);
    // Searching big blocks first tightens the incumbent before budget runs low.
    std::stable_sort(blks.begin(), blks.end(),
                     [](VertexSet a, VertexSet b) { return popcount(a) > popcount(b); });
    for (VertexSet blk : blks) {
        if (popcount(blk) < 3 || popcount(blk) <= out.length) continue;
        detail::Compact c = detail::compact_subgraph(g, blk);
        detail::LocalPath found = detail::best_cycle_in_block(c, out.length, budget);
        if (!found.exact) out.exact = false;
        if (found.length > out.length) {
            out.length = found.length;
            out.witness = detail::to_global_seq(c, found.seq);
        }
    }
    return out;
}

// Number of vertices on a longest path (a single vertex counts as 1).
// Exact DP for n <= 20, budgeted DFS from every start vertex beyond.
inline CycleReport longest_path_vertices(const Graph& g, std::uint64_t budget = kDefaultSearchBudget) {
    const int n = g.order();
    CycleReport out;
    if (n <= 20) {
        const std::size_t size = std::size_t{1} << n;
        std::vector<std::uint64_t> reach(size, 0);
        for (int v = 0; v < n; ++v) reach[bit(v)] = bit(v);
        int best = 1;
        std::uint64_t best_set = bit(0);
        int best_end = 0;
        for (std::uint64_t s = 1; s < size; ++s) {
            const std::uint64_t ends = reach[s];
            if (!ends) continue;
            const int len = popcount(s);
            if (len > best) {
                best = len;
                best_set = s;
                best_end = lowest(ends);
            }
            for (int w : bits{ends})
                for (int x : bits{g.neighbors(w) & ~s}) reach[s | bit(x)] |= bit(x);
        }
        out.length = best;
        int cur = best_end;
        std::uint64_t s = best_set;
        out.witness.push_back(cur);
        while (popcount(s) > 1) {
            const std::uint64_t preds = reach[s & ~bit(cur)] & g.neighbors(cur);
            s &= ~bit(cur);
            cur = lowest(preds);
            out.witness.push_back(cur);
        }
        std::reverse(out.witness.begin(), out.witness.end());
        return out;
    }

    struct PathBnB {
        const Graph& g;
        std::uint64_t budget;
        bool complete = true;
        int best = 0;
        std::vector<int> best_seq, cur_seq;

        void dfs(int w, std::uint64_t s) {
            if (budget == 0) {
                complete = false;
                return;
            }
            --budget;
            const std::uint64_t allowed = (g.vertex_mask() & ~s) | bit(w);
            const std::uint64_t reach = reachable_within(g, w, allowed);
            if (popcount(s) + popcount(reach & ~s) <= best) return;
            if (popcount(s) > best) {
                best = popcount(s);
                best_seq = cur_seq;
            }
            for (int x : bits{g.neighbors(w) & ~s}) {
                cur_seq.push_back(x);
                dfs(x, s | bit(x));
                cur_seq.pop_back();
                if (!complete) return;
            }
        }
    } bnb{g, budget, true, 0, {}, {}};
    for (int start = 0; start < n && bnb.complete; ++start) {
        bnb.cur_seq = {start};
        bnb.dfs(start, bit(start));
    }
    out.length = bnb.best;
    out.exact = bnb.complete;
    out.witness = std::move(bnb.best_seq);
    return out;
}

struct EllResult {
    int value = 0;   // max degree over end-vertices of short-cycle edges
    int vertex = 0;  // first vertex attaining it
};

// Max degree over end-vertices of edges uv with c_uv < k; empty when every
// edge lies on a cycle of length at least k.
inline std::optional<EllResult> ell(const Graph& g, int k,
                                    std::uint64_t budget = kDefaultSearchBudget) {
    std::optional<EllResult> best;
    for (auto [u, v] : g.edges()) {
        CycleReport rep = longest_cycle_through_edge(g, u, v, budget);
        if (!rep.exact && rep.length < k)
            throw std::runtime_error("ell: cycle search exhausted its budget");
        if (rep.length >= k) continue;
        for (int x : {u, v}) {
            const int d = g.degree(x);
            if (!best || d > best->value) best = EllResult{d, x};
        }
    }
    return best;
}

// Witness checks shared by tests and the verification harness.
inline bool valid_path_witness(const Graph& g, const std::vector<int>& seq) {
    if (seq.empty()) return false;
    VertexSet seen = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const int x = seq[i];
        if (x < 0 || x >= g.order() || (seen & bit(x))) return false;
        seen |= bit(x);
        if (i > 0 && !g.has_edge(seq[i - 1], x)) return false;
    }
    return true;
}

inline bool valid_cycle_witness(const Graph& g, const std::vector<int>& seq,
                                std::optional<std::pair<int, int>> designated = std::nullopt) {
    if (seq.size() < 3) return false;
    if (!valid_path_witness(g, seq)) return false;
    if (!g.has_edge(seq.back(), seq.front())) return false;
    if (designated) {
        auto [u, v] = *designated;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const int a = seq[i], b = seq[(i + 1) % seq.size()];
            if ((a == u && b == v) || (a == v && b == u)) return true;
        }
        return false;
    }
    return true;
}

}  // namespace cliquecycles
