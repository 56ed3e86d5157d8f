#include <catch2/catch_amalgamated.hpp>

#include "cliquecycles/cliques.hpp"
#include "cliquecycles/constructions.hpp"
#include "cliquecycles/enumeration.hpp"
#include "cliquecycles/random_graphs.hpp"

using namespace cliquecycles;

TEST_CASE("profiles of standard graphs") {
    const CliqueProfile k5 = clique_profile(Graph::complete(5));
    REQUIRE(k5.n_s(0) == 1);
    REQUIRE(k5.n_s(1) == 5);
    REQUIRE(k5.n_s(2) == 10);
    REQUIRE(k5.n_s(3) == 10);
    REQUIRE(k5.n_s(4) == 5);
    REQUIRE(k5.n_s(5) == 1);
    REQUIRE(k5.n_s(6) == 0);
    REQUIRE(k5.clique_number() == 5);

    const CliqueProfile c6 = clique_profile(Graph::cycle(6));
    REQUIRE(c6.n_s(2) == 6);
    REQUIRE(c6.n_s(3) == 0);
    REQUIRE(c6.clique_number() == 2);

    REQUIRE(clique_profile(Graph::empty(4)).clique_number() == 1);
}

TEST_CASE("profile of the two-clique edge join") {
    // Edge 01 joined to two triangle blocks and one extra vertex, n = 9.
    const Graph g = build_X(9, 6).first;
    const CliqueProfile p = clique_profile(g);
    // 1 spine + 2 blocks of 3 + the 2x7 join: 21 edges.
    REQUIRE(p.n_s(2) == 21);
    REQUIRE(p.n_s(3) == 21);
    REQUIRE(p.n_s(4) == 10);
    REQUIRE(p.n_s(5) == 2);
    REQUIRE(p.n_s(6) == 0);
}

TEST_CASE("the Petersen graph is triangle free") {
    // Outer 5-cycle, inner 5-cycle with step 2, spokes.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
        edges.push_back({i, 5 + i});
    }
    const Graph petersen(10, edges);
    REQUIRE(petersen.edge_count() == 15);
    const CliqueProfile p = clique_profile(petersen);
    REQUIRE(p.n_s(2) == 15);
    REQUIRE(p.n_s(3) == 0);
}

TEST_CASE("profile agrees with the subset oracle on every graph up to order 5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_graphs(n, GraphFilter::none, [&](const Graph& g) {
            REQUIRE(clique_profile(g) == brute_force_profile(g));
        });
    }
}

TEST_CASE("profile agrees with the subset oracle on random graphs up to order 12") {
    std::uint64_t checked = 0;
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t seed = derive_seed(20250801, i);
        const int n = 2 + static_cast<int>(seed % 11);
        const double p = 0.15 + 0.7 * static_cast<double>((seed >> 20) % 1000) / 1000.0;
        const Graph g = random_graph(n, p, seed);
        const CliqueProfile fast = clique_profile(g);
        REQUIRE(fast == brute_force_profile(g));
        REQUIRE(fast == clique_profile_plain(g));
        ++checked;
    }
    REQUIRE(checked == 500);
}

TEST_CASE("single size count matches the profile entry") {
    const Graph g = random_graph(14, 0.55, 77);
    const CliqueProfile p = clique_profile(g);
    for (int s = 1; s <= 14; ++s) REQUIRE(count_cliques(g, s) == p.n_s(s));
    REQUIRE_THROWS_AS(count_cliques(g, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(count_cliques(g, 15), std::invalid_argument);
}

TEST_CASE("adding an edge never decreases a clique count") {
    const std::uint64_t seed = 99;
    Graph g = random_graph(10, 0.3, seed);
    CliqueProfile before = clique_profile(g);
    for (int u = 0; u < 10; ++u) {
        for (int v = u + 1; v < 10; ++v) {
            if (g.has_edge(u, v)) continue;
            auto edges = g.edges();
            edges.push_back({u, v});
            const Graph bigger(10, edges);
            const CliqueProfile after = clique_profile(bigger);
            for (int s = 1; s <= 10; ++s) REQUIRE(after.n_s(s) >= before.n_s(s));
            g = bigger;
            before = after;
        }
    }
    REQUIRE(g.edge_count() == 45);
    REQUIRE(before.n_s(10) == 1);
}

TEST_CASE("cone vertex identity") {
    // Joining a fresh vertex to all of g adds one clique of size s+1 per
    // clique of size s.
    const Graph g = random_graph(9, 0.4, 1234);
    auto edges = g.edges();
    for (int v = 0; v < 9; ++v) edges.push_back({v, 9});
    const Graph coned(10, edges);
    const CliqueProfile base = clique_profile(g);
    const CliqueProfile lifted = clique_profile(coned);
    for (int s = 1; s <= 10; ++s) REQUIRE(lifted.n_s(s) == base.n_s(s) + base.n_s(s - 1));
}

TEST_CASE("cliques split additively at a cut vertex") {
    // Two K4 blocks glued at vertex 0: for s >= 2 counts add up.
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) edges.push_back({a, b});
    const std::array<int, 4> second{0, 4, 5, 6};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) edges.push_back({second[a], second[b]});
    const Graph glued(7, edges);
    const CliqueProfile whole = clique_profile(glued);
    const CliqueProfile one = clique_profile(Graph::complete(4));
    for (int s = 2; s <= 7; ++s) REQUIRE(whole.n_s(s) == 2 * one.n_s(s));
    REQUIRE(whole.n_s(1) == 7);
}

TEST_CASE("profile equality and u64 conversion") {
    const Graph g = Graph::complete(4);
    const CliqueProfile p = clique_profile(g);
    const std::vector<std::uint64_t> flat = p.to_u64();
    REQUIRE(flat == std::vector<std::uint64_t>{4, 6, 4, 1});
    REQUIRE_THROWS_AS(p.n_s(-1), std::invalid_argument);
    REQUIRE(p.n_s(40) == 0);
}
