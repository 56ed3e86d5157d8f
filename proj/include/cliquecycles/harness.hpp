// Verification campaigns.  Each target checks one statement over either the
// full labeled graph space (n small) or seeded random samples, emitting a
// deterministic report.  The cell index space is split into contiguous
// per-worker ranges and per-worker results are merged in range order, so
// totals and records never depend on the worker count.

#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "cliques.hpp"
#include "constructions.hpp"
#include "cycles.hpp"
#include "enumeration.hpp"
#include "graph6.hpp"
#include "random_graphs.hpp"

namespace cliquecycles {

enum class Target {
    theorem_main,
    theorem_b,
    kopylov,
    luo,
    erdos_gallai,
    fan,
    lemma_a,
    lemma_b,
    lemma_c,
    proposition,
    inequalities,
    sharpness,
};

enum class Mode { exhaustive, random };

inline const char* target_name(Target t) {
    switch (t) {
        case Target::theorem_main: return "theorem-main";
        case Target::theorem_b: return "theorem-b";
        case Target::kopylov: return "kopylov";
        case Target::luo: return "luo";
        case Target::erdos_gallai: return "erdos-gallai";
        case Target::fan: return "fan";
        case Target::lemma_a: return "lemma-A";
        case Target::lemma_b: return "lemma-B";
        case Target::lemma_c: return "lemma-C";
        case Target::proposition: return "proposition";
        case Target::inequalities: return "inequalities";
        case Target::sharpness: return "sharpness";
    }
    return "?";
}

inline std::optional<Target> target_from_name(std::string_view name) {
    for (Target t : {Target::theorem_main, Target::theorem_b, Target::kopylov, Target::luo,
                     Target::erdos_gallai, Target::fan, Target::lemma_a, Target::lemma_b,
                     Target::lemma_c, Target::proposition, Target::inequalities, Target::sharpness})
        if (name == target_name(t)) return t;
    return std::nullopt;
}

inline const char* mode_name(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "random"; }

inline std::optional<Mode> mode_from_name(std::string_view name) {
    if (name == "exhaustive") return Mode::exhaustive;
    if (name == "random") return Mode::random;
    return std::nullopt;
}

// Inclusive integer range; empty when hi < lo.
struct Range {
    int lo = 0;
    int hi = -1;
    bool empty() const { return hi < lo; }
    bool contains(int x) const { return lo <= x && x <= hi; }
    bool operator==(const Range&) const = default;
};

struct CampaignConfig {
    Target target = Target::theorem_main;
    Mode mode = Mode::exhaustive;
    Range n, k, s;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool has_seed = false;
    int workers = 1;
    std::size_t equality_cap = 1000;
    std::vector<double> p_grid = {0.2, 0.35, 0.5, 0.65, 0.8};
    bool deep = false;  // raises the exhaustive cap from n = 7 to n = 8
};

enum class Verdict { pass, fail, equality };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::equality: return "equality";
    }
    return "?";
}

// One checked instance.  For upper-bound statements fail means observed >
// bound.  For lower-bound statements observed/bound are swapped on emission
// so the same rule applies; `statement` labels the sub-case.  x1/x2 carry
// statement-specific extras (inequality remainders, the switched edge's
// third vertex).
struct VerificationRecord {
    std::string graph;
    std::optional<std::pair<int, int>> edge;
    int k = 0;
    int s = 0;
    std::uint64_t bound = 0;
    std::uint64_t observed = 0;
    Verdict verdict = Verdict::pass;
    std::vector<int> witness;
    std::string statement;
    std::optional<int> x1, x2;

    bool operator==(const VerificationRecord&) const = default;
};

struct Totals {
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::uint64_t equalities = 0;
    std::uint64_t failures = 0;
    std::uint64_t skipped = 0;

    bool operator==(const Totals&) const = default;
};

struct WorkerDigest {
    int worker = 0;
    std::uint64_t cell_lo = 0;
    std::uint64_t cell_hi = 0;
    Totals totals;

    bool operator==(const WorkerDigest&) const = default;
};

struct CampaignReport {
    CampaignConfig config;
    Totals totals;
    std::vector<VerificationRecord> failures;    // never capped
    std::vector<VerificationRecord> equalities;  // first equality_cap in cell order
    std::vector<WorkerDigest> workers;
    double wall_seconds = 0;
};

namespace harness_detail {

inline std::uint64_t to_u64(count_t v) {
    if (v >> 64) throw std::overflow_error("record value exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

// Prefilled identification fields for records emitted while checking one
// candidate.
struct RecordBase {
    const std::string* graph = nullptr;
    std::optional<std::pair<int, int>> edge;
    int k = 0;
    int s = 0;
    std::string_view statement;
    std::optional<int> x1, x2;
};

struct Sink {
    Totals totals;
    std::vector<VerificationRecord> failures;
    std::vector<VerificationRecord> equalities;
    std::size_t equality_cap = 1000;

    void skip(std::uint64_t m = 1) { totals.skipped += m; }

    VerificationRecord make(const RecordBase& base, count_t observed, count_t bound,
                            Verdict verdict) const {
        VerificationRecord rec;
        rec.graph = *base.graph;
        rec.edge = base.edge;
        rec.k = base.k;
        rec.s = base.s;
        rec.bound = to_u64(bound);
        rec.observed = to_u64(observed);
        rec.verdict = verdict;
        rec.statement = std::string(base.statement);
        rec.x1 = base.x1;
        rec.x2 = base.x2;
        return rec;
    }

    // Upper-bound check: fail iff observed > bound, equality tracked.
    void check(const RecordBase& base, count_t observed, count_t bound) {
        ++totals.checked;
        if (observed > bound) {
            ++totals.failures;
            failures.push_back(make(base, observed, bound, Verdict::fail));
        } else if (observed == bound) {
            ++totals.equalities;
            if (equalities.size() < equality_cap)
                equalities.push_back(make(base, observed, bound, Verdict::equality));
        } else {
            ++totals.passed;
        }
    }

    // Boolean statement: holds/violated, no equality bookkeeping.
    void check_holds(const RecordBase& base, bool holds) {
        ++totals.checked;
        if (holds) {
            ++totals.passed;
        } else {
            ++totals.failures;
            failures.push_back(make(base, 1, 0, Verdict::fail));
        }
    }

    // Exact-match statement (sharpness): fail on any mismatch, pass on equal.
    void check_equal(const RecordBase& base, count_t observed, count_t expected) {
        ++totals.checked;
        if (observed == expected) {
            ++totals.passed;
        } else {
            ++totals.failures;
            failures.push_back(make(base, observed, expected, Verdict::fail));
        }
    }
};

// ---- cell spaces ------------------------------------------------------

struct GraphSpan {
    int n = 0;
    std::uint64_t offset = 0;
    std::uint64_t count = 0;
};

inline std::vector<GraphSpan> graph_spans(Range n_range) {
    std::vector<GraphSpan> spans;
    std::uint64_t offset = 0;
    for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
        const std::uint64_t count = labeled_graph_count(n);
        spans.push_back({n, offset, count});
        offset += count;
    }
    return spans;
}

inline std::pair<int, std::uint64_t> resolve_span(const std::vector<GraphSpan>& spans,
                                                  std::uint64_t index) {
    for (const GraphSpan& sp : spans)
        if (index < sp.offset + sp.count) return {sp.n, index - sp.offset};
    throw std::logic_error("cell index outside graph spans");
}

// Grid targets enumerate their cells with a replayable generator: one pass
// counts, the per-worker pass calls the callback only inside [lo, hi).
template <typename Gen>
std::uint64_t count_cells(Gen&& gen) {
    std::uint64_t count = 0;
    gen([&](auto&&...) { ++count; });
    return count;
}

template <typename Gen, typename Fn>
void replay_cells(Gen&& gen, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    std::uint64_t index = 0;
    gen([&](auto&&... cell) {
        if (index >= lo && index < hi) fn(cell...);
        ++index;
    });
}

// ---- per-target candidate evaluation ----------------------------------

struct EdgeCycleCache {
    // c_e per edge, computed lazily; -1 = unknown.
    std::array<std::int16_t, kMaxVertices * kMaxVertices> c{};
    EdgeCycleCache() { c.fill(-1); }
    int get(const Graph& g, int u, int v) {
        auto& slot = c[std::min(u, v) * kMaxVertices + std::max(u, v)];
        if (slot < 0) {
            const CycleReport rep = longest_cycle_through_edge(g, u, v);
            if (!rep.exact) return -2;  // caller must skip
            slot = static_cast<std::int16_t>(rep.length);
        }
        return slot;
    }
};

inline void theorem_main_cell(const CampaignConfig& cfg, const Graph& g, Sink& sink,
                              bool fan_only) {
    if (!is_two_connected(g)) {
        sink.skip();
        return;
    }
    const int n = g.order();
    const int klo = std::max(4, cfg.k.lo), khi = cfg.k.hi;
    const int slo = fan_only ? 2 : std::max(2, cfg.s.lo);
    const int shi = fan_only ? 2 : std::min(n, cfg.s.hi);
    if (klo > khi || slo > shi) return;
    const std::string g6 = to_graph6(g);
    const CliqueProfile prof = clique_profile(g);
    for (auto [u, v] : g.edges()) {
        const CycleReport rep = longest_cycle_through_edge(g, u, v);
        for (int k = klo; k <= khi; ++k) {
            const bool hyp = rep.exact ? rep.length < k : !has_cycle_through_edge_at_least(g, u, v, k);
            if (!hyp) {
                sink.skip();
                continue;
            }
            for (int s = slo; s <= shi; ++s) {
                RecordBase base{&g6, {{u, v}}, k, s, fan_only ? "fan" : "", {}, {}};
                sink.check(base, prof.n_s(s), g_s(n, k, s));
            }
        }
    }
}

inline void theorem_b_cell(const CampaignConfig& cfg, const Graph& g, Sink& sink) {
    if (!is_connected(g)) {
        sink.skip();
        return;
    }
    const int n = g.order();
    const int klo = std::max(4, cfg.k.lo), khi = cfg.k.hi;
    const int slo = std::max(2, cfg.s.lo), shi = std::min(n, cfg.s.hi);
    if (klo > khi || slo > shi) return;
    const CycleReport circ = circumference(g);
    const std::string g6 = to_graph6(g);
    const CliqueProfile prof = clique_profile(g);
    for (int k = klo; k <= khi; ++k) {
        if (!(circ.exact && circ.length < k)) {
            sink.skip();
            continue;
        }
        for (int s = slo; s <= shi; ++s) {
            RecordBase base{&g6, {}, k, s, "", {}, {}};
            sink.check(base, prof.n_s(s), psi_s(n, k, s));
        }
    }
}

inline void kopylov_luo_cell(const CampaignConfig& cfg, const Graph& g, Sink& sink, bool luo) {
    if (!is_two_connected(g)) {
        sink.skip();
        return;
    }
    const int n = g.order();
    const int klo = std::max(5, cfg.k.lo), khi = std::min(n, cfg.k.hi);
    const int slo = luo ? std::max(2, cfg.s.lo) : 2;
    const int shi = luo ? std::min(n, cfg.s.hi) : 2;
    if (klo > khi || slo > shi) return;
    const CycleReport circ = circumference(g);
    const std::string g6 = to_graph6(g);
    const CliqueProfile prof = clique_profile(g);
    for (int k = klo; k <= khi; ++k) {
        if (!(circ.exact && circ.length < k)) {
            sink.skip();
            continue;
        }
        const int t = (k - 1) / 2;
        for (int s = slo; s <= shi; ++s) {
            RecordBase base{&g6, {}, k, s, luo ? "luo" : "kopylov", {}, {}};
            sink.check(base, prof.n_s(s), std::max(f_s(n, k, 2, s), f_s(n, k, t, s)));
        }
    }
}

inline void erdos_gallai_cell(const CampaignConfig& cfg, const Graph& g, Sink& sink) {
    const int n = g.order();
    const int klo = std::max(3, cfg.k.lo), khi = cfg.k.hi;
    if (klo > khi) return;
    const CycleReport circ = circumference(g);
    const CycleReport path = longest_path_vertices(g);
    const std::string g6 = to_graph6(g);
    const count_t twice_e = count_t(2) * g.edge_count();
    for (int k = klo; k <= khi; ++k) {
        if (circ.exact && circ.length < k) {
            RecordBase base{&g6, {}, k, 2, "cycle", {}, {}};
            sink.check(base, twice_e, count_t(k - 1) * (n - 1));
        } else {
            sink.skip();
        }
        if (path.exact && path.length < k) {
            RecordBase base{&g6, {}, k, 2, "path", {}, {}};
            sink.check(base, twice_e, count_t(n) * (k - 2));
        } else {
            sink.skip();
        }
    }
}

// Ordered edge pairs (u,v), uv an edge, in ascending (u,v) order.
inline std::vector<std::pair<int, int>> ordered_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v : bits{g.neighbors(u)}) out.emplace_back(u, v);
    return out;
}

inline void lemma_a_pair(const Graph& g, const std::string& g6, int u, int v, Sink& sink,
                         EdgeCycleCache& cache) {
    const Graph switched = edge_switch(g, v, u);
    EdgeCycleCache switched_cache;
    for (int x : bits{g.neighbors(u)}) {
        const int before = cache.get(g, u, x);
        const int after = switched_cache.get(switched, u, x);
        if (before < 0 || after < 0) {
            sink.skip();
            continue;
        }
        RecordBase base{&g6, {{u, v}}, 0, 0, "", std::optional<int>(x), {}};
        sink.check(base, after, before);
    }
}

inline void lemma_b_pair(const Graph& g, const std::string& g6, int u, int v, Sink& sink) {
    const bool disjoint = (g.neighbors(u) & g.neighbors(v)) == 0;
    const Graph transformed = disjoint ? contract(g, u, v).first : edge_switch(g, v, u);
    const bool conclusion = is_two_connected(transformed) || is_pair_cut(g, u, v);
    RecordBase base{&g6, {{u, v}}, 0, 0, disjoint ? "i" : "ii", {}, {}};
    sink.check_holds(base, conclusion);
}

inline void lemma_c_pair(const CampaignConfig& cfg, const Graph& g, const std::string& g6,
                         const CliqueProfile& prof, int u, int v, Sink& sink) {
    const int n = g.order();
    const int slo = std::max(2, cfg.s.lo), shi = std::min(n, cfg.s.hi);
    if ((g.neighbors(u) & g.neighbors(v)) == 0) {
        const CliqueProfile after = clique_profile(contract(g, u, v).first);
        for (int s = std::max(3, slo); s <= shi; ++s) {
            RecordBase base{&g6, {{u, v}}, 0, s, "i", {}, {}};
            sink.check(base, prof.n_s(s), after.n_s(s));
        }
    }
    const CliqueProfile after = clique_profile(edge_switch(g, v, u));
    for (int s = slo; s <= shi; ++s) {
        RecordBase base{&g6, {{u, v}}, 0, s, "ii", {}, {}};
        sink.check(base, prof.n_s(s), after.n_s(s));
    }
}

inline void lemma_cell(const CampaignConfig& cfg, const Graph& g, Sink& sink,
                       std::mt19937_64* rng) {
    const bool need_two_connected = cfg.target == Target::lemma_b;
    if (need_two_connected ? !is_two_connected(g) : !is_connected(g)) {
        sink.skip();
        return;
    }
    const std::string g6 = to_graph6(g);
    std::vector<std::pair<int, int>> pairs = ordered_edges(g);
    if (pairs.empty()) {
        sink.skip();
        return;
    }
    if (rng) pairs = {pairs[(*rng)() % pairs.size()]};
    EdgeCycleCache cache;
    CliqueProfile prof;
    if (cfg.target == Target::lemma_c) prof = clique_profile(g);
    for (auto [u, v] : pairs) {
        switch (cfg.target) {
            case Target::lemma_a: lemma_a_pair(g, g6, u, v, sink, cache); break;
            case Target::lemma_b: lemma_b_pair(g, g6, u, v, sink); break;
            case Target::lemma_c: lemma_c_pair(cfg, g, g6, prof, u, v, sink); break;
            default: throw std::logic_error("lemma_cell: not a lemma target");
        }
    }
}

inline void proposition_cell(int n, int k, int s, Sink& sink) {
    static const std::string no_graph;
    RecordBase base{&no_graph, {}, k, s, "", std::optional<int>(n), {}};
    sink.check(base, std::max(f_s(n, k, 2, s), f_s(n, k, (k - 1) / 2, s)), psi_s(n, k, s));
}

inline void inequality_cell(int form, int k, int s, int t1, int t2, Sink& sink) {
    static const std::string no_graph;
    RecordBase base{&no_graph, {}, k, s, form == 1 ? "1" : "3", std::optional<int>(t1),
                    std::optional<int>(t2)};
    count_t lhs, rhs;
    if (form == 1) {
        lhs = binom(t1 + 1, s) + binom(t2 + 1, s);
        rhs = t1 + t2 <= k - 2 ? binom(t1 + t2 + 1, s)
                               : binom(k - 1, s) + binom(t1 + t2 - k + 3, s);
    } else {
        lhs = binom(t1 + 2, s) + binom(t2 + 2, s);
        rhs = t1 + t2 <= k - 4 ? binom(t1 + t2 + 2, s)
                               : binom(k - 1, s) + binom(t1 + t2 - k + 5, s);
    }
    sink.check(base, lhs, rhs);
}

inline void sharpness_cell(const CampaignConfig& cfg, int n, int k, Sink& sink) {
    const int slo = std::max(2, cfg.s.lo), shi = std::min(n, cfg.s.hi);
    if (slo > shi) return;
    {
        auto [x, spec] = build_X(n, k);
        const std::string g6 = to_graph6(x);
        const CliqueProfile prof = clique_profile(x);
        for (int s = slo; s <= shi; ++s) {
            RecordBase base{&g6, spec.edge, k, s, "X", {}, {}};
            sink.check_equal(base, prof.n_s(s), g_s(n, k, s));
        }
    }
    {
        auto [q, spec] = build_Q(n, k);
        const std::string g6 = to_graph6(q);
        const CliqueProfile prof = clique_profile(q);
        for (int s = slo; s <= shi; ++s) {
            RecordBase base{&g6, {}, k, s, "Q", {}, {}};
            sink.check_equal(base, prof.n_s(s), psi_s(n, k, s));
        }
    }
    for (int a = 1; 2 * a < k; ++a) {
        auto [h, spec] = build_H(n, k, a);
        const std::string g6 = to_graph6(h);
        const CliqueProfile prof = clique_profile(h);
        for (int s = slo; s <= shi; ++s) {
            RecordBase base{&g6, {}, k, s, "H", std::optional<int>(a), {}};
            sink.check_equal(base, prof.n_s(s), f_s(n, k, a, s));
        }
    }
}

// ---- campaign assembly ------------------------------------------------

inline bool is_graph_target(Target t) {
    switch (t) {
        case Target::proposition:
        case Target::inequalities:
        case Target::sharpness: return false;
        default: return true;
    }
}

inline GraphFilter sample_filter(Target t) {
    switch (t) {
        case Target::theorem_main:
        case Target::kopylov:
        case Target::luo:
        case Target::fan:
        case Target::lemma_b: return GraphFilter::two_connected;
        case Target::theorem_b:
        case Target::lemma_a:
        case Target::lemma_c: return GraphFilter::connected;
        case Target::erdos_gallai: return GraphFilter::none;
        default: throw std::logic_error("sample_filter: not a graph target");
    }
}

inline void run_graph_cell(const CampaignConfig& cfg, const Graph& g, Sink& sink,
                           std::mt19937_64* rng) {
    switch (cfg.target) {
        case Target::theorem_main: theorem_main_cell(cfg, g, sink, false); break;
        case Target::fan: theorem_main_cell(cfg, g, sink, true); break;
        case Target::theorem_b: theorem_b_cell(cfg, g, sink); break;
        case Target::kopylov: kopylov_luo_cell(cfg, g, sink, false); break;
        case Target::luo: kopylov_luo_cell(cfg, g, sink, true); break;
        case Target::erdos_gallai: erdos_gallai_cell(cfg, g, sink); break;
        case Target::lemma_a:
        case Target::lemma_b:
        case Target::lemma_c: lemma_cell(cfg, g, sink, rng); break;
        default: throw std::logic_error("run_graph_cell: not a graph target");
    }
}

inline Graph sample_graph(const CampaignConfig& cfg, std::mt19937_64& gen) {
    const int span = cfg.n.hi - cfg.n.lo + 1;
    const int n = cfg.n.lo + static_cast<int>(gen() % span);
    const double p = cfg.p_grid[gen() % cfg.p_grid.size()];
    const std::uint64_t graph_seed = gen();
    switch (sample_filter(cfg.target)) {
        case GraphFilter::none: return random_graph(n, p, graph_seed);
        case GraphFilter::connected: return random_connected(n, p, graph_seed);
        case GraphFilter::two_connected: return random_two_connected(n, p, graph_seed);
    }
    throw std::logic_error("sample_graph: unreachable");
}

template <typename CellFn>
CampaignReport run_partitioned(const CampaignConfig& cfg, std::uint64_t total_cells,
                               const CellFn& cell_fn) {
    const auto start = std::chrono::steady_clock::now();
    const int workers = std::max(1, cfg.workers);
    std::vector<Sink> sinks(workers);
    std::vector<WorkerDigest> digests(workers);
    auto run_worker = [&](int w) {
        Sink& sink = sinks[w];
        sink.equality_cap = cfg.equality_cap;
        const std::uint64_t lo = total_cells * w / workers;
        const std::uint64_t hi = total_cells * (w + 1) / workers;
        cell_fn(lo, hi, sink);
        digests[w] = {w, lo, hi, sink.totals};
    };
    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
        for (std::thread& t : threads) t.join();
    }
    CampaignReport report;
    report.config = cfg;
    report.workers = std::move(digests);
    for (Sink& sink : sinks) {
        report.totals.checked += sink.totals.checked;
        report.totals.passed += sink.totals.passed;
        report.totals.equalities += sink.totals.equalities;
        report.totals.failures += sink.totals.failures;
        report.totals.skipped += sink.totals.skipped;
        std::move(sink.failures.begin(), sink.failures.end(), std::back_inserter(report.failures));
        std::move(sink.equalities.begin(), sink.equalities.end(),
                  std::back_inserter(report.equalities));
    }
    if (report.equalities.size() > cfg.equality_cap) report.equalities.resize(cfg.equality_cap);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace harness_detail

// Throws std::invalid_argument when the config cannot be run.
inline void validate_config(const CampaignConfig& cfg) {
    using harness_detail::is_graph_target;
    if (cfg.workers < 1) throw std::invalid_argument("config: workers < 1");
    if (!is_graph_target(cfg.target)) {
        if (cfg.mode == Mode::random)
            throw std::invalid_argument("config: grid targets support only exhaustive mode");
        if (cfg.target != Target::inequalities && cfg.n.empty())
            throw std::invalid_argument("config: n range required");
        if (cfg.target != Target::inequalities && cfg.n.hi > kMaxVertices)
            throw std::invalid_argument("config: n exceeds 62");
        return;
    }
    if (cfg.n.empty()) throw std::invalid_argument("config: n range required");
    if (cfg.mode == Mode::exhaustive) {
        const int cap = cfg.deep ? kEnumMaxVertices : kEnumMaxVertices - 1;
        if (cfg.n.hi > cap)
            throw std::invalid_argument("config: exhaustive n capped at " + std::to_string(cap) +
                                        (cfg.deep ? "" : " (use the deep flag for 8)"));
    } else {
        if (cfg.samples < 1) throw std::invalid_argument("config: random mode needs samples >= 1");
        if (!cfg.has_seed) throw std::invalid_argument("config: random mode needs an explicit seed");
        if (cfg.n.lo < 1 || cfg.n.hi > kMaxVertices)
            throw std::invalid_argument("config: n outside [1, 62]");
        if (cfg.p_grid.empty()) throw std::invalid_argument("config: empty p grid");
    }
}

inline CampaignReport run_campaign(const CampaignConfig& cfg) {
    using namespace harness_detail;
    validate_config(cfg);

    if (is_graph_target(cfg.target)) {
        if (cfg.mode == Mode::exhaustive) {
            const std::vector<GraphSpan> spans = graph_spans(cfg.n);
            std::uint64_t total = 0;
            for (const GraphSpan& sp : spans) total += sp.count;
            return run_partitioned(cfg, total, [&](std::uint64_t lo, std::uint64_t hi, Sink& sink) {
                for (std::uint64_t index = lo; index < hi; ++index) {
                    auto [n, code] = resolve_span(spans, index);
                    const Graph g = graph_from_code(n, code);
                    run_graph_cell(cfg, g, sink, nullptr);
                }
            });
        }
        return run_partitioned(cfg, cfg.samples, [&](std::uint64_t lo, std::uint64_t hi, Sink& sink) {
            for (std::uint64_t index = lo; index < hi; ++index) {
                std::mt19937_64 gen(derive_seed(cfg.seed, index));
                const Graph g = sample_graph(cfg, gen);
                run_graph_cell(cfg, g, sink, &gen);
            }
        });
    }

    switch (cfg.target) {
        case Target::proposition: {
            auto cells = [&](auto&& f) {
                for (int n = std::max(5, cfg.n.lo); n <= cfg.n.hi; ++n)
                    for (int k = std::max(5, cfg.k.lo); k <= std::min(n, cfg.k.hi); ++k)
                        for (int s = std::max(2, cfg.s.lo); s <= cfg.s.hi; ++s) f(n, k, s);
            };
            const std::uint64_t total = count_cells(cells);
            return run_partitioned(cfg, total, [&](std::uint64_t lo, std::uint64_t hi, Sink& sink) {
                replay_cells(cells, lo, hi,
                             [&](int n, int k, int s) { proposition_cell(n, k, s, sink); });
            });
        }
        case Target::inequalities: {
            auto cells = [&](auto&& f) {
                for (int k = std::max(5, cfg.k.lo); k <= cfg.k.hi; ++k)
                    for (int s = std::max(2, cfg.s.lo); s <= cfg.s.hi; ++s)
                        for (int t1 = 0; t1 <= k - 3; ++t1)
                            for (int t2 = 0; t2 <= k - 3; ++t2) f(1, k, s, t1, t2);
                for (int k = std::max(5, cfg.k.lo); k <= cfg.k.hi; ++k)
                    for (int s = std::max(3, cfg.s.lo); s <= cfg.s.hi; ++s)
                        for (int t1 = 0; t1 <= k - 4; ++t1)
                            for (int t2 = 0; t2 <= k - 4; ++t2) f(3, k, s, t1, t2);
            };
            const std::uint64_t total = count_cells(cells);
            return run_partitioned(cfg, total, [&](std::uint64_t lo, std::uint64_t hi, Sink& sink) {
                replay_cells(cells, lo, hi, [&](int form, int k, int s, int t1, int t2) {
                    inequality_cell(form, k, s, t1, t2, sink);
                });
            });
        }
        case Target::sharpness: {
            auto cells = [&](auto&& f) {
                for (int n = std::max(4, cfg.n.lo); n <= cfg.n.hi; ++n)
                    for (int k = std::max(4, cfg.k.lo); k <= std::min(n, cfg.k.hi); ++k) f(n, k);
            };
            const std::uint64_t total = count_cells(cells);
            return run_partitioned(cfg, total, [&](std::uint64_t lo, std::uint64_t hi, Sink& sink) {
                replay_cells(cells, lo, hi, [&](int n, int k) { sharpness_cell(cfg, n, k, sink); });
            });
        }
        default: throw std::logic_error("run_campaign: unhandled target");
    }
}

// All equality instances of the main bound at fixed (n, k, s) over the
// exhaustive 2-connected space.
inline std::vector<VerificationRecord> find_extremal_witnesses(int n, int k, int s,
                                                               bool deep = false) {
    CampaignConfig cfg;
    cfg.target = Target::theorem_main;
    cfg.mode = Mode::exhaustive;
    cfg.n = {n, n};
    cfg.k = {k, k};
    cfg.s = {s, s};
    cfg.deep = deep;
    cfg.equality_cap = std::size_t{1} << 40;
    CampaignReport report = run_campaign(cfg);
    if (!report.failures.empty())
        throw std::runtime_error("find_extremal_witnesses: bound violated");
    return std::move(report.equalities);
}

}  // namespace cliquecycles
