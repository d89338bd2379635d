#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "raag/analysis.hpp"
#include "raag/census.hpp"
#include "raag/construction.hpp"
#include "raag/graph.hpp"

// JSON views of the result types.  ordered_json keeps insertion order, so a
// given value always serializes to the same bytes.  Group orders are JSON
// numbers while they fit in 64 bits and decimal strings beyond that.

namespace raag {

using json = nlohmann::ordered_json;

inline json to_json(const bigint& v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

inline json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

inline json to_json(const Permutation& p) {
    json out = json::object();
    for (const auto& [k, v] : p.mapping()) out[k] = v;
    return out;
}

inline json to_json(const SupportGraph& sg) {
    json edges = json::array();
    for (auto [i, j] : sg.edges) edges.push_back(json::array({i, j}));
    return json{{"base", sg.base},
                {"nodes", sg.nodes},
                {"edges", std::move(edges)},
                {"component_count", sg.component_count},
                {"is_forest", sg.is_forest}};
}

inline json to_json(const ThetaGraph& theta) {
    json verts = json::array();
    for (const auto& tv : theta.vertices) {
        json v{{"label", tv.label()},
               {"type", tv.type_two ? "II" : "I"},
               {"base", tv.base}};
        if (tv.type_two)
            v["index"] = tv.beta_index;
        else {
            v["component_a"] = tv.comp_a;
            v["component_b"] = tv.comp_b;
        }
        verts.push_back(std::move(v));
    }
    json edges = json::array();
    for (const auto& [u, v] : theta.graph.edges()) edges.push_back(json::array({u, v}));
    return json{{"vertices", std::move(verts)}, {"edges", std::move(edges)}};
}

inline json to_json(const WitnessTable& t) {
    json rows = json::array();
    for (const auto& row : t.cells) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(cell ? json(*cell) : json(nullptr));
        rows.push_back(std::move(r));
    }
    return json{{"vertices", t.order}, {"cells", std::move(rows)}};
}

inline json to_json(const AnalysisReport& rep) {
    json tr = json::array();
    for (const auto& t : rep.transvections)
        tr.push_back(json{{"source", t.source}, {"target", t.target}});
    return json{{"forests_ok", rep.forests_ok},
                {"finite_index", rep.finite_index},
                {"transvections", std::move(tr)},
                {"witness_table", to_json(rep.witness_table)},
                {"theta", rep.theta ? to_json(*rep.theta) : json(nullptr)},
                {"partial_conjugation_count", rep.partial_conjugation_count},
                {"inversion_count", rep.inversion_count},
                {"aut_order", to_json(rep.aut_order)},
                {"quotient_order",
                 rep.quotient_order ? to_json(*rep.quotient_order) : json(nullptr)}};
}

inline json to_json(const VerificationResult& r) {
    return json{{"kind", to_string(r.kind)},
                {"lambda_vertices", r.lambda_vertices},
                {"gamma_vertices", r.gamma_vertices},
                {"gamma_edges", r.gamma_edges},
                {"forests_ok", r.forests_ok},
                {"theta_iso_ok", r.theta_iso_ok},
                {"theta_bijection",
                 r.theta_bijection ? to_json(*r.theta_bijection) : json(nullptr)},
                {"finite_index_ok", r.finite_index_ok},
                {"aut_trivial_ok", r.aut_trivial_ok ? json(*r.aut_trivial_ok) : json(nullptr)},
                {"quotient_order",
                 r.quotient_order ? to_json(*r.quotient_order) : json(nullptr)},
                {"passed", r.passed()}};
}

inline json to_json(const CensusEntry& e) {
    return json{{"canonical", e.canonical},
                {"n", e.n},
                {"pso_is_raag", e.pso_is_raag},
                {"finite_index", e.finite_index},
                {"theta_canonical", e.theta_canonical ? json(*e.theta_canonical) : json(nullptr)},
                {"quotient_order",
                 e.quotient_order ? to_json(*e.quotient_order) : json(nullptr)}};
}

inline json to_json(const CoverageReport& rep) {
    json levels = json::array();
    for (const auto& lvl : rep.levels)
        levels.push_back(json{{"n", lvl.n},
                              {"classes", lvl.classes},
                              {"verified", lvl.verified},
                              {"via_preset", lvl.via_preset},
                              {"via_gamma_prime", lvl.via_gamma_prime}});
    return json{{"max_n", rep.max_n},
                {"levels", std::move(levels)},
                {"failures", rep.failures},
                {"all_verified", rep.all_verified}};
}

inline json to_json(const SampleSweep& sw) {
    json fails = json::array();
    for (std::size_t i = 0; i < sw.results.size(); ++i)
        if (!sw.results[i].passed()) fails.push_back(i);
    return json{{"seed", sw.seed},
                {"target", to_string(sw.target)},
                {"samples", sw.results.size()},
                {"passed", sw.passed},
                {"failed_indices", std::move(fails)}};
}

}  // namespace raag
