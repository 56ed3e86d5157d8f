// Command-line front end: construct the extremal families, count cliques,
// query longest cycles, run verification campaigns, merge reports.
// Exit codes: 0 success / no failures, 1 verification failures, 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliquecycles/harness.hpp"
#include "cliquecycles/report_io.hpp"

namespace cc = cliquecycles;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cc::Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("bad range '" + text + "' (expected N or A..B)");
    }
}

std::vector<int> mask_to_vector(cc::VertexSet mask) {
    std::vector<int> out;
    for (int v : cc::bits{mask}) out.push_back(v);
    return out;
}

std::vector<std::string> read_graph_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw UsageError("cannot open input file '" + path + "'");
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

cc::json sidecar_json(const cc::ConstructionSpec& spec) {
    cc::json j;
    j["family"] = std::string(1, static_cast<char>(std::tolower(spec.family)));
    j["n"] = spec.n;
    j["k"] = spec.k;
    if (spec.family == 'H') j["a"] = spec.a;
    j["parts"] = cc::json{{"A", mask_to_vector(spec.part_a)},
                          {"B", mask_to_vector(spec.part_b)},
                          {"C", mask_to_vector(spec.part_c)}};
    if (!spec.b_blocks.empty()) {
        cc::json blocks = cc::json::array();
        for (cc::VertexSet b : spec.b_blocks) blocks.push_back(mask_to_vector(b));
        j["blocks"] = std::move(blocks);
    }
    if (spec.edge) j["edge"] = cc::json::array({spec.edge->first, spec.edge->second});
    if (spec.hub) j["hub"] = *spec.hub;
    std::vector<std::uint64_t> predicted;
    predicted.push_back(spec.n);
    for (int s = 2; s <= spec.n; ++s) {
        cc::count_t v = 0;
        if (spec.family == 'H') v = cc::f_s(spec.n, spec.k, spec.a, s);
        if (spec.family == 'X') v = cc::g_s(spec.n, spec.k, s);
        if (spec.family == 'Q') v = cc::psi_s(spec.n, spec.k, s);
        predicted.push_back(cc::harness_detail::to_u64(v));
    }
    j["predicted_profile"] = std::move(predicted);
    return j;
}

int run_construct(const std::string& family, int n, int k, int a, const std::string& sidecar_path) {
    cc::Graph g = cc::Graph::complete(1);
    cc::ConstructionSpec spec;
    if (family == "h") {
        auto built = cc::build_H(n, k, a);
        g = built.first;
        spec = built.second;
    } else if (family == "x") {
        auto built = cc::build_X(n, k);
        g = built.first;
        spec = built.second;
    } else if (family == "q") {
        auto built = cc::build_Q(n, k);
        g = built.first;
        spec = built.second;
    } else {
        throw UsageError("unknown family '" + family + "' (expected h, x, or q)");
    }
    std::cout << cc::to_graph6(g) << "\n";
    const std::string sidecar = sidecar_json(spec).dump();
    if (sidecar_path.empty()) {
        std::cerr << sidecar << "\n";
    } else {
        std::ofstream out(sidecar_path);
        if (!out) throw UsageError("cannot write sidecar file '" + sidecar_path + "'");
        out << sidecar << "\n";
    }
    return 0;
}

int run_count(const std::string& input, std::optional<int> s) {
    for (const std::string& line : read_graph_lines(input)) {
        const cc::Graph g = cc::from_graph6(line);
        cc::json j;
        if (s) {
            j["n_s"] = cc::harness_detail::to_u64(cc::count_cliques(g, *s));
        } else {
            j["profile"] = cc::clique_profile(g).to_u64();
        }
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int run_cycle(const std::string& input, const std::string& edge_text, bool want_circumference,
              std::optional<int> at_least, std::uint64_t budget) {
    if (edge_text.empty() == !want_circumference)
        throw UsageError("pass exactly one of --edge U,V or --circumference");
    if (at_least && want_circumference) throw UsageError("--at-least needs --edge");
    std::optional<std::pair<int, int>> edge;
    if (!edge_text.empty()) {
        const auto comma = edge_text.find(',');
        if (comma == std::string::npos) throw UsageError("--edge expects U,V");
        try {
            edge = {std::stoi(edge_text.substr(0, comma)), std::stoi(edge_text.substr(comma + 1))};
        } catch (const std::exception&) {
            throw UsageError("--edge expects U,V");
        }
    }
    for (const std::string& line : read_graph_lines(input)) {
        const cc::Graph g = cc::from_graph6(line);
        cc::json j;
        if (want_circumference) {
            const cc::CycleReport rep = cc::circumference(g, budget);
            j["circumference"] = rep.length;
            j["exact"] = rep.exact;
            if (!rep.witness.empty()) j["witness"] = rep.witness;
        } else {
            const cc::CycleReport rep = cc::longest_cycle_through_edge(g, edge->first, edge->second, budget);
            j["c_e"] = rep.length;
            j["exact"] = rep.exact;
            if (!rep.witness.empty()) j["witness"] = rep.witness;
            if (at_least)
                j["at_least"] = cc::has_cycle_through_edge_at_least(g, edge->first, edge->second,
                                                                    *at_least);
        }
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int default_workers() {
    const char* env = std::getenv("NCYCLES_WORKERS");
    if (!env) return 1;
    try {
        const int w = std::stoi(env);
        if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw UsageError("NCYCLES_WORKERS must be a positive integer");
}

void resolve_defaults(cc::CampaignConfig& cfg, bool n_given, bool k_given, bool s_given) {
    using cc::Target;
    const bool needs_n = cfg.target != Target::inequalities;
    if (needs_n && !n_given) throw UsageError("--n is required for this target");
    const int nhi = cfg.n.hi;
    if (!k_given) {
        switch (cfg.target) {
            case Target::theorem_main:
            case Target::theorem_b:
            case Target::fan:
            case Target::sharpness: cfg.k = {4, std::max(4, nhi)}; break;
            case Target::kopylov:
            case Target::luo:
            case Target::proposition: cfg.k = {5, std::max(5, nhi)}; break;
            case Target::erdos_gallai: cfg.k = {3, std::max(3, nhi)}; break;
            case Target::inequalities: cfg.k = {5, 40}; break;
            default: cfg.k = {0, -1}; break;
        }
    }
    if (!s_given) {
        switch (cfg.target) {
            case Target::proposition: cfg.s = {2, 20}; break;
            case Target::inequalities: cfg.s = {2, 12}; break;
            case Target::kopylov:
            case Target::fan:
            case Target::lemma_a:
            case Target::lemma_b: cfg.s = {2, 2}; break;
            default: cfg.s = {2, std::max(2, nhi)}; break;
        }
    }
}

int run_verify(cc::CampaignConfig cfg, bool csv) {
    const cc::CampaignReport report = cc::run_campaign(cfg);
    if (csv)
        std::cout << cc::report_to_csv(report);
    else
        std::cout << cc::report_to_json(report).dump(2) << "\n";
    return report.totals.failures > 0 ? 1 : 0;
}

int run_merge(const std::vector<std::string>& paths) {
    std::vector<cc::json> reports;
    for (const std::string& path : paths) {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open report '" + path + "'");
        cc::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw UsageError("cannot parse report '" + path + "': " + e.what());
        }
        reports.push_back(std::move(j));
    }
    const cc::json merged = cc::merge_reports(reports);
    std::cout << merged.dump(2) << "\n";
    return merged["totals"]["failures"].get<std::uint64_t>() > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact clique counts, longest cycles, and extremal bound verification"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "emit an extremal family graph as graph6");
    std::string family;
    int con_n = 0, con_k = 0, con_a = 0;
    std::string sidecar_path;
    construct->add_option("family", family, "h, x, or q")->required();
    construct->add_option("--n", con_n, "order")->required();
    construct->add_option("--k", con_k, "cycle-length parameter")->required();
    construct->add_option("--a", con_a, "part size (h only)");
    construct->add_option("--sidecar", sidecar_path, "write the JSON sidecar here instead of stderr");

    auto* count = app.add_subcommand("count", "clique profile of graph6 input");
    std::string count_input;
    int count_s = 0;
    count->add_option("file", count_input, "graph6 input file (default stdin)");
    auto* count_s_opt = count->add_option("--s", count_s, "report N_s only");

    auto* cycle = app.add_subcommand("cycle", "longest cycle queries on graph6 input");
    std::string cycle_input, edge_text;
    bool want_circ = false;
    int at_least_k = 0;
    std::uint64_t budget = cc::kDefaultSearchBudget;
    cycle->add_option("file", cycle_input, "graph6 input file (default stdin)");
    cycle->add_option("--edge", edge_text, "designated edge U,V");
    cycle->add_flag("--circumference", want_circ, "longest cycle overall");
    auto* at_least_opt = cycle->add_option("--at-least", at_least_k, "also decide c_e >= K");
    cycle->add_option("--budget", budget, "search node budget for blocks above the exact cut-off");

    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::string target_text, mode_text = "exhaustive", n_text, k_text, s_text;
    cc::CampaignConfig cfg;
    bool csv = false;
    verify->add_option("target", target_text, "statement to verify")->required();
    verify->add_option("--mode", mode_text, "exhaustive (default) or random");
    auto* n_opt = verify->add_option("--n", n_text, "order range A..B");
    auto* k_opt = verify->add_option("--k", k_text, "k range A..B");
    auto* s_opt = verify->add_option("--s", s_text, "clique-size range A..B");
    verify->add_option("--samples", cfg.samples, "sample count (random mode)");
    auto* seed_opt = verify->add_option("--seed", cfg.seed, "campaign seed (random mode)");
    auto* workers_opt = verify->add_option("--workers", cfg.workers, "worker thread count");
    verify->add_option("--equality-cap", cfg.equality_cap, "max stored equality records");
    verify->add_flag("--deep", cfg.deep, "allow exhaustive n = 8");
    verify->add_flag("--csv", csv, "emit records as CSV instead of a JSON report");

    auto* merge = app.add_subcommand("report-merge", "combine campaign reports");
    std::vector<std::string> merge_paths;
    merge->add_option("reports", merge_paths, "report JSON files")->required()->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*construct) return run_construct(family, con_n, con_k, con_a, sidecar_path);
        if (*count)
            return run_count(count_input,
                             count_s_opt->count() ? std::optional<int>(count_s) : std::nullopt);
        if (*cycle)
            return run_cycle(cycle_input, edge_text, want_circ,
                             at_least_opt->count() ? std::optional<int>(at_least_k) : std::nullopt,
                             budget);
        if (*verify) {
            const auto target = cc::target_from_name(target_text);
            if (!target) throw UsageError("unknown target '" + target_text + "'");
            cfg.target = *target;
            const auto mode = cc::mode_from_name(mode_text);
            if (!mode) throw UsageError("unknown mode '" + mode_text + "'");
            cfg.mode = *mode;
            if (n_opt->count()) cfg.n = parse_range(n_text);
            if (k_opt->count()) cfg.k = parse_range(k_text);
            if (s_opt->count()) cfg.s = parse_range(s_text);
            cfg.has_seed = seed_opt->count() > 0;
            if (!workers_opt->count()) cfg.workers = default_workers();
            resolve_defaults(cfg, n_opt->count() > 0, k_opt->count() > 0, s_opt->count() > 0);
            return run_verify(cfg, csv);
        }
        if (*merge) return run_merge(merge_paths);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cc::Graph6Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
