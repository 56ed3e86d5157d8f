// Seeded G(n,p) sampling.  Edge decisions avoid std::*_distribution so the
// same (n, p, seed) gives the same graph on every standard library: one
// mt19937_64 draw per vertex pair, taken in the upper-triangle order, with
// the top 53 bits compared against round(p * 2^53).

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "connectivity.hpp"
#include "graph.hpp"

namespace cliquecycles {

inline constexpr int kDefaultRetryBudget = 10'000;

// Per-sample seed stream: splitmix64 finalizer over a golden-ratio stride.
inline std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t index) {
    std::uint64_t z = campaign_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace detail {

inline Graph random_graph_from(std::mt19937_64& gen, int n, double p) {
    std::array<VertexSet, kMaxVertices> rows{};
    const bool all = p >= 1.0, none = p <= 0.0;
    const std::uint64_t threshold =
        all || none ? 0 : static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            const bool edge = all || (!none && (gen() >> 11) < threshold);
            if (edge) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    return Graph::from_rows(n, rows);
}

template <typename Pred>
Graph random_filtered(int n, double p, std::uint64_t seed, int retry_budget, Pred pred,
                      const char* what) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random graph: n out of [1, 62]");
    std::mt19937_64 gen(seed);
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Graph g = random_graph_from(gen, n, p);
        if (pred(g)) return g;
    }
    throw std::runtime_error(std::string(what) + ": no graph passed the predicate in " +
                             std::to_string(retry_budget) + " attempts");
}

}  // namespace detail

inline Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_graph: n out of [1, 62]");
    std::mt19937_64 gen(seed);
    return detail::random_graph_from(gen, n, p);
}

inline Graph random_connected(int n, double p, std::uint64_t seed,
                              int retry_budget = kDefaultRetryBudget) {
    return detail::random_filtered(n, p, seed, retry_budget,
                                   [](const Graph& g) { return is_connected(g); },
                                   "random_connected");
}

inline Graph random_two_connected(int n, double p, std::uint64_t seed,
                                  int retry_budget = kDefaultRetryBudget) {
    return detail::random_filtered(n, p, seed, retry_budget,
                                   [](const Graph& g) { return is_two_connected(g); },
                                   "random_two_connected");
}

}  // namespace cliquecycles
