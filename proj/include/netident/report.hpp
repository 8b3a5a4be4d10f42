#ifndef NETIDENT_REPORT_HPP
#define NETIDENT_REPORT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "netident/combinatorial.hpp"
#include "netident/netmodel.hpp"
#include "netident/verdict.hpp"

// JSON forms of verdicts and tables used by the CLI reports. Node and edge
// numbers are 1-based; edge numbers refer to positions in the network's edge list.

namespace netident {

using Json = nlohmann::ordered_json;

inline Json edge_ref_to_json(const NetworkModel& net, std::size_t id) {
    return Json{{"edge", id + 1}, {"from", net.edges[id].from + 1}, {"to", net.edges[id].to + 1}};
}

inline Json monomial_to_json(const NetworkModel& net, const Monomial& mu) {
    Json factors = Json::array();
    for (auto [id, mult] : mu.terms()) {
        Json f = edge_ref_to_json(net, id);
        f["power"] = mult;
        factors.push_back(f);
    }
    return Json{{"text", mu.to_string(net)}, {"degree", mu.degree()}, {"factors", factors}};
}

inline Monomial monomial_from_json(const Json& j) {
    std::vector<std::size_t> ids;
    for (const auto& f : j.at("factors"))
        for (std::uint32_t k = 0; k < f.at("power").get<std::uint32_t>(); ++k)
            ids.push_back(f.at("edge").get<std::size_t>() - 1);
    return Monomial::from_edges(std::move(ids));
}

inline Json walk_to_json(const NetworkModel& net, const Walk& w) {
    Json nodes = Json::array(), edges = Json::array();
    for (NodeId v : w.nodes(net)) nodes.push_back(v + 1);
    for (std::size_t id : w.edges) edges.push_back(id + 1);
    return Json{{"text", w.to_string(net)}, {"nodes", nodes}, {"edges", edges}, {"pivot_position", w.pivot_pos}};
}

inline Walk walk_from_json(const Json& j) {
    Walk w;
    for (const auto& id : j.at("edges")) w.edges.push_back(id.get<std::size_t>() - 1);
    w.pivot_pos = j.at("pivot_position").get<std::size_t>();
    const auto& nodes = j.at("nodes");
    w.start = nodes.front().get<std::size_t>() - 1;
    w.end = nodes.back().get<std::size_t>() - 1;
    return w;
}

inline Decision decision_from_string(const std::string& s) {
    for (Decision d : {Decision::Identifiable, Decision::NotIdentifiable, Decision::Inconclusive})
        if (s == to_string(d)) return d;
    throw std::invalid_argument("unknown decision '" + s + "'");
}

inline Notion notion_from_string(const std::string& s) {
    for (Notion n : {Notion::LocalGeneric, Notion::DecoupledGeneric, Notion::GlobalSeparable})
        if (s == to_string(n)) return n;
    throw std::invalid_argument("unknown notion '" + s + "'");
}

inline Json verdict_to_json(const NetworkModel& net, const Verdict& v) {
    const Evidence& ev = v.evidence;
    Json e;
    if (ev.rank) e["rank"] = *ev.rank;
    e["unknowns"] = ev.unknowns;
    e["trials"] = ev.trials;
    e["seed"] = ev.seed;
    if (ev.max_degree) e["max_degree"] = *ev.max_degree;
    if (ev.exhaustive) e["exhaustive"] = *ev.exhaustive;
    if (ev.zero_column) e["zero_column"] = edge_ref_to_json(net, *ev.zero_column);
    if (ev.collection) {
        Json walks = Json::array();
        for (const Walk& w : ev.collection->walks) walks.push_back(walk_to_json(net, w));
        e["witness"] = Json{{"monomial", monomial_to_json(net, ev.collection->monomial)},
                            {"repetition", ev.collection->repetition},
                            {"sign", ev.collection->sign},
                            {"walks", walks}};
    }
    return Json{{"decision", to_string(v.decision)}, {"notion", to_string(v.notion)}, {"evidence", e}};
}

inline Verdict verdict_from_json(const Json& j) {
    Verdict v;
    v.decision = decision_from_string(j.at("decision").get<std::string>());
    v.notion = notion_from_string(j.at("notion").get<std::string>());
    const Json& e = j.at("evidence");
    Evidence& ev = v.evidence;
    if (e.contains("rank")) ev.rank = e["rank"].get<std::size_t>();
    ev.unknowns = e.at("unknowns").get<std::size_t>();
    ev.trials = e.at("trials").get<int>();
    ev.seed = e.at("seed").get<std::uint64_t>();
    if (e.contains("max_degree")) ev.max_degree = e["max_degree"].get<std::size_t>();
    if (e.contains("exhaustive")) ev.exhaustive = e["exhaustive"].get<bool>();
    if (e.contains("zero_column")) ev.zero_column = e["zero_column"].at("edge").get<std::size_t>() - 1;
    if (e.contains("witness")) {
        const Json& w = e["witness"];
        CollectionWitness cw;
        cw.monomial = monomial_from_json(w.at("monomial"));
        cw.repetition = w.at("repetition").get<std::int64_t>();
        cw.sign = w.at("sign").get<int>();
        for (const auto& jw : w.at("walks")) cw.walks.push_back(walk_from_json(jw));
        ev.collection = std::move(cw);
    }
    return v;
}

inline Json table_to_json(const NetworkModel& net, const RepetitionTable& t) {
    Json entries = Json::array();
    for (const auto& [mu, r] : t.repetition) {
        Json m = monomial_to_json(net, mu);
        m["repetition"] = r;
        entries.push_back(m);
    }
    return Json{{"max_degree", t.max_degree},
                {"exhaustive", t.exhaustive},
                {"collections", t.collections},
                {"entries", entries}};
}

inline Json network_summary(const NetworkModel& net) {
    return Json{{"nodes", net.n},
                {"edges", net.edges.size()},
                {"excited", net.n_excited()},
                {"measured", net.n_measured()},
                {"unknowns", net.n_unknown()}};
}

} // namespace netident

#endif
