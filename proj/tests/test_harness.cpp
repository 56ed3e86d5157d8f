#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "cliquecycles/graph6.hpp"
#include "cliquecycles/harness.hpp"

using namespace cliquecycles;

namespace {

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < a.order() && match; ++u)
            for (int v = u + 1; v < a.order() && match; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("target and mode names round trip") {
    for (Target t : {Target::theorem_main, Target::theorem_b, Target::kopylov, Target::luo,
                     Target::erdos_gallai, Target::fan, Target::lemma_a, Target::lemma_b,
                     Target::lemma_c, Target::proposition, Target::inequalities, Target::sharpness})
        REQUIRE(target_from_name(target_name(t)) == t);
    REQUIRE_FALSE(target_from_name("nonsense").has_value());
    REQUIRE(mode_from_name("random") == Mode::random);
    REQUIRE_FALSE(mode_from_name("Random").has_value());
}

TEST_CASE("config validation") {
    CampaignConfig cfg;
    cfg.target = Target::theorem_main;
    cfg.n = {4, 6};
    REQUIRE_NOTHROW(validate_config(cfg));

    cfg.n = {4, 8};
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg.deep = true;
    REQUIRE_NOTHROW(validate_config(cfg));
    cfg.n = {4, 9};
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);

    cfg = CampaignConfig{};
    cfg.target = Target::lemma_a;
    cfg.mode = Mode::random;
    cfg.n = {4, 10};
    cfg.samples = 10;
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);  // no seed
    cfg.has_seed = true;
    REQUIRE_NOTHROW(validate_config(cfg));
    cfg.samples = 0;
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg.samples = 10;
    cfg.p_grid.clear();
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);

    cfg = CampaignConfig{};
    cfg.target = Target::sharpness;
    cfg.mode = Mode::random;
    cfg.n = {4, 10};
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);  // grids are exhaustive
    cfg.mode = Mode::exhaustive;
    cfg.n = {};
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);  // n required

    cfg = CampaignConfig{};
    cfg.target = Target::inequalities;
    cfg.k = {5, 10};
    cfg.s = {2, 6};
    REQUIRE_NOTHROW(validate_config(cfg));  // no n needed
}

TEST_CASE("main bound sweep over orders 4 and 5") {
    CampaignConfig cfg;
    cfg.target = Target::theorem_main;
    cfg.n = {4, 5};
    cfg.k = {4, 5};
    cfg.s = {2, 5};
    const CampaignReport rep = run_campaign(cfg);
    REQUIRE(rep.totals.failures == 0);
    REQUIRE(rep.totals.checked == 1562);
    REQUIRE(rep.totals.passed == 1056);
    REQUIRE(rep.totals.equalities == 506);
    REQUIRE(rep.totals.skipped == 3812);
    REQUIRE(rep.totals.checked == rep.totals.passed + rep.totals.equalities + rep.totals.failures);
    REQUIRE(rep.failures.empty());
    REQUIRE(rep.equalities.size() == 506);
    for (const VerificationRecord& rec : rep.equalities) {
        REQUIRE(rec.observed == rec.bound);
        REQUIRE(rec.verdict == Verdict::equality);
        REQUIRE(rec.edge.has_value());
        const Graph g = from_graph6(rec.graph);
        REQUIRE(count_cliques(g, rec.s) == rec.observed);
    }
}

TEST_CASE("hub bound equality at the triangle") {
    CampaignConfig cfg;
    cfg.target = Target::theorem_b;
    cfg.n = {3, 3};
    cfg.k = {4, 4};
    cfg.s = {3, 3};
    const CampaignReport rep = run_campaign(cfg);
    REQUIRE(rep.totals.checked == 4);
    REQUIRE(rep.totals.passed == 3);
    REQUIRE(rep.totals.equalities == 1);
    REQUIRE(rep.totals.failures == 0);
    REQUIRE(rep.totals.skipped == 4);
    REQUIRE(rep.equalities.size() == 1);
    REQUIRE(rep.equalities[0].observed == 1);
    REQUIRE(from_graph6(rep.equalities[0].graph) == Graph::complete(3));
}

TEST_CASE("equality witnesses at order 5 are exactly the labeled books") {
    const auto recs = find_extremal_witnesses(5, 4, 3);
    REQUIRE(recs.size() == 10);
    const Graph book = build_X(5, 4).first;
    for (const VerificationRecord& rec : recs) {
        REQUIRE(rec.observed == 3);  // n - 2
        REQUIRE(rec.bound == 3);
        const Graph g = from_graph6(rec.graph);
        REQUIRE(isomorphic(g, book));
        // The recorded edge is the spine: the only edge in every triangle.
        REQUIRE(rec.edge.has_value());
        auto [u, v] = *rec.edge;
        REQUIRE(longest_cycle_through_edge(g, u, v).length == 3);
    }
}

TEST_CASE("equality witnesses at order 4 are the labeled diamonds") {
    const auto recs = find_extremal_witnesses(4, 4, 3);
    REQUIRE(recs.size() == 6);
    const Graph diamond = build_X(4, 4).first;
    for (const VerificationRecord& rec : recs) {
        REQUIRE(rec.observed == 2);
        REQUIRE(isomorphic(from_graph6(rec.graph), diamond));
    }
}

TEST_CASE("equality witnesses at order 6 are the labeled edge joins") {
    const auto recs = find_extremal_witnesses(6, 5, 3);
    REQUIRE(recs.size() == 45);
    const Graph x65 = build_X(6, 5).first;
    for (const VerificationRecord& rec : recs) {
        REQUIRE(rec.observed == 8);
        REQUIRE(isomorphic(from_graph6(rec.graph), x65));
        auto [u, v] = *rec.edge;
        REQUIRE(longest_cycle_through_edge(from_graph6(rec.graph), u, v).length == 4);
    }
}

TEST_CASE("the restricted edge bound attains equality on the same family") {
    CampaignConfig cfg;
    cfg.target = Target::fan;
    cfg.n = {6, 6};
    cfg.k = {5, 5};
    cfg.equality_cap = std::size_t{1} << 40;
    const CampaignReport rep = run_campaign(cfg);
    REQUIRE(rep.totals.failures == 0);
    REQUIRE(rep.totals.checked == 3810);
    REQUIRE(rep.totals.equalities == 45);
    const Graph x65 = build_X(6, 5).first;
    for (const VerificationRecord& rec : rep.equalities) {
        REQUIRE(rec.observed == 11);
        REQUIRE(rec.s == 2);
        REQUIRE(rec.statement == "fan");
        REQUIRE(isomorphic(from_graph6(rec.graph), x65));
    }
}

TEST_CASE("worker count changes nothing but the digests") {
    CampaignConfig base;
    base.target = Target::lemma_c;
    base.mode = Mode::random;
    base.n = {4, 12};
    base.samples = 200;
    base.seed = 42;
    base.has_seed = true;

    CampaignConfig threaded = base;
    threaded.workers = 3;

    const CampaignReport one = run_campaign(base);
    const CampaignReport three = run_campaign(threaded);
    REQUIRE(one.totals == three.totals);
    REQUIRE(one.failures == three.failures);
    REQUIRE(one.equalities == three.equalities);
    REQUIRE(one.workers.size() == 1);
    REQUIRE(three.workers.size() == 3);

    // Digest cell ranges tile the sample space without gaps.
    std::uint64_t expect_lo = 0;
    Totals merged;
    for (const WorkerDigest& d : three.workers) {
        REQUIRE(d.cell_lo == expect_lo);
        expect_lo = d.cell_hi;
        merged.checked += d.totals.checked;
        merged.passed += d.totals.passed;
        merged.equalities += d.totals.equalities;
        merged.failures += d.totals.failures;
        merged.skipped += d.totals.skipped;
    }
    REQUIRE(expect_lo == base.samples);
    REQUIRE(merged == three.totals);
}

TEST_CASE("equality cap truncation is stable across worker counts") {
    CampaignConfig cfg;
    cfg.target = Target::fan;
    cfg.n = {5, 5};
    cfg.k = {4, 4};
    cfg.equality_cap = 3;
    const CampaignReport one = run_campaign(cfg);
    cfg.workers = 4;
    const CampaignReport four = run_campaign(cfg);
    REQUIRE(one.equalities.size() == 3);
    REQUIRE(one.equalities == four.equalities);
    REQUIRE(one.totals.equalities == four.totals.equalities);
    REQUIRE(one.totals.equalities >= 3);  // cap hides none from the totals
}

TEST_CASE("exhaustive lemma sweeps at order up to 5 hold") {
    for (Target t : {Target::lemma_a, Target::lemma_b, Target::lemma_c}) {
        CampaignConfig cfg;
        cfg.target = t;
        cfg.n = {3, 5};
        cfg.s = {2, 5};
        const CampaignReport rep = run_campaign(cfg);
        REQUIRE(rep.totals.failures == 0);
        REQUIRE(rep.totals.checked > 0);
    }
}

TEST_CASE("random campaigns on every graph target run clean") {
    for (Target t : {Target::theorem_main, Target::theorem_b, Target::kopylov, Target::luo,
                     Target::erdos_gallai, Target::fan, Target::lemma_a, Target::lemma_b,
                     Target::lemma_c}) {
        CampaignConfig cfg;
        cfg.target = t;
        cfg.mode = Mode::random;
        cfg.n = {4, 11};
        cfg.k = {4, 8};
        cfg.s = {2, 6};
        cfg.samples = 60;
        cfg.seed = 7;
        cfg.has_seed = true;
        const CampaignReport rep = run_campaign(cfg);
        REQUIRE(rep.totals.failures == 0);
        REQUIRE(rep.totals.checked > 0);
    }
}

TEST_CASE("grid campaigns hold on compact ranges") {
    CampaignConfig prop;
    prop.target = Target::proposition;
    prop.n = {5, 30};
    prop.k = {5, 30};
    prop.s = {2, 10};
    REQUIRE(run_campaign(prop).totals.failures == 0);

    CampaignConfig ineq;
    ineq.target = Target::inequalities;
    ineq.k = {5, 20};
    ineq.s = {2, 8};
    REQUIRE(run_campaign(ineq).totals.failures == 0);

    CampaignConfig sharp;
    sharp.target = Target::sharpness;
    sharp.n = {4, 10};
    sharp.k = {4, 10};
    sharp.s = {2, 10};
    const CampaignReport rep = run_campaign(sharp);
    REQUIRE(rep.totals.failures == 0);
    REQUIRE(rep.totals.equalities == 0);  // exact matches count as passes here
    REQUIRE(rep.totals.checked > 0);
}
