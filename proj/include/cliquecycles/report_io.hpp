// Report serialization.  JSON key order comes from nlohmann's sorted object
// keys, so identical campaigns serialize byte-identically; wall_seconds is
// the only field expected to vary between reruns.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "harness.hpp"

namespace cliquecycles {

using json = nlohmann::json;

inline json range_to_json(const Range& r) { return json::array({r.lo, r.hi}); }

inline json config_to_json(const CampaignConfig& c) {
    json j;
    j["target"] = target_name(c.target);
    j["mode"] = mode_name(c.mode);
    j["n"] = range_to_json(c.n);
    j["k"] = range_to_json(c.k);
    j["s"] = range_to_json(c.s);
    j["samples"] = c.samples;
    if (c.has_seed)
        j["seed"] = c.seed;
    else
        j["seed"] = nullptr;
    j["workers"] = c.workers;
    j["equality_cap"] = c.equality_cap;
    j["p_grid"] = c.p_grid;
    j["deep"] = c.deep;
    return j;
}

inline json totals_to_json(const Totals& t) {
    return json{{"checked", t.checked},
                {"passed", t.passed},
                {"equalities", t.equalities},
                {"failures", t.failures},
                {"skipped", t.skipped}};
}

inline json record_to_json(const VerificationRecord& r) {
    json j;
    j["graph"] = r.graph;
    if (r.edge) j["edge"] = json::array({r.edge->first, r.edge->second});
    j["k"] = r.k;
    j["s"] = r.s;
    j["bound"] = r.bound;
    j["observed"] = r.observed;
    j["verdict"] = verdict_name(r.verdict);
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.statement.empty()) j["statement"] = r.statement;
    if (r.x1) j["x1"] = *r.x1;
    if (r.x2) j["x2"] = *r.x2;
    return j;
}

inline json report_to_json(const CampaignReport& rep) {
    json j;
    j["config"] = config_to_json(rep.config);
    j["totals"] = totals_to_json(rep.totals);
    json failures = json::array();
    for (const VerificationRecord& r : rep.failures) failures.push_back(record_to_json(r));
    j["failures"] = std::move(failures);
    json equalities = json::array();
    for (const VerificationRecord& r : rep.equalities) equalities.push_back(record_to_json(r));
    j["equalities"] = std::move(equalities);
    json workers = json::array();
    for (const WorkerDigest& d : rep.workers)
        workers.push_back(json{{"worker", d.worker},
                               {"cells", json::array({d.cell_lo, d.cell_hi})},
                               {"totals", totals_to_json(d.totals)}});
    j["workers"] = std::move(workers);
    j["wall_seconds"] = rep.wall_seconds;
    return j;
}

inline std::string csv_escape_witness(const std::vector<int>& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(w[i]);
    }
    return out;
}

// One row per failure/equality record; graph6 never contains commas.
inline std::string report_to_csv(const CampaignReport& rep) {
    std::string out = "verdict,graph,u,v,k,s,observed,bound,statement,x1,x2,witness\n";
    auto emit = [&out](const VerificationRecord& r) {
        out += verdict_name(r.verdict);
        out.push_back(',');
        out += r.graph;
        out.push_back(',');
        if (r.edge) out += std::to_string(r.edge->first);
        out.push_back(',');
        if (r.edge) out += std::to_string(r.edge->second);
        out.push_back(',');
        out += std::to_string(r.k);
        out.push_back(',');
        out += std::to_string(r.s);
        out.push_back(',');
        out += std::to_string(r.observed);
        out.push_back(',');
        out += std::to_string(r.bound);
        out.push_back(',');
        out += r.statement;
        out.push_back(',');
        if (r.x1) out += std::to_string(*r.x1);
        out.push_back(',');
        if (r.x2) out += std::to_string(*r.x2);
        out.push_back(',');
        out += csv_escape_witness(r.witness);
        out.push_back('\n');
    };
    for (const VerificationRecord& r : rep.failures) emit(r);
    for (const VerificationRecord& r : rep.equalities) emit(r);
    return out;
}

// Combines parsed report objects: configs side by side, totals summed,
// records concatenated in input order.  Throws on schema mismatch.
inline json merge_reports(const std::vector<json>& reports) {
    json merged;
    merged["configs"] = json::array();
    Totals totals;
    json failures = json::array();
    json equalities = json::array();
    for (const json& rep : reports) {
        if (!rep.contains("totals") || !rep.contains("failures") || !rep.contains("equalities"))
            throw std::runtime_error("merge: input is not a campaign report");
        merged["configs"].push_back(rep.value("config", json(nullptr)));
        const json& t = rep["totals"];
        totals.checked += t.at("checked").get<std::uint64_t>();
        totals.passed += t.at("passed").get<std::uint64_t>();
        totals.equalities += t.at("equalities").get<std::uint64_t>();
        totals.failures += t.at("failures").get<std::uint64_t>();
        totals.skipped += t.at("skipped").get<std::uint64_t>();
        for (const json& r : rep["failures"]) failures.push_back(r);
        for (const json& r : rep["equalities"]) equalities.push_back(r);
    }
    merged["totals"] = totals_to_json(totals);
    merged["failures"] = std::move(failures);
    merged["equalities"] = std::move(equalities);
    return merged;
}

}  // namespace cliquecycles
