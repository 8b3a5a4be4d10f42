#ifndef NETIDENT_IO_HPP
#define NETIDENT_IO_HPP

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "netident/netmodel.hpp"

namespace netident {

// Malformed or invalid input; the message names the line or the field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k)
        if (text[k] == '\n') ++line;
    return line;
}

inline std::size_t node_field(const nlohmann::json& j, const std::string& where, std::size_t n) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer node number");
    const auto v = j.get<std::int64_t>();
    if (v < 1 || static_cast<std::size_t>(v) > n)
        throw InputError(where + ": node " + std::to_string(v) + " outside 1.." + std::to_string(n));
    return static_cast<std::size_t>(v - 1);
}

} // namespace detail

// Reads the network schema
//   {"nodes": n, "edges": [{"from", "to", "known", "value"?}...], "excited": [...], "measured": [...]}
// with 1-based node numbers. Structural invariants are checked by validate().
inline NetworkModel parse_network(const std::string& text, const std::string& source = "<input>") {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(source + ":" + std::to_string(detail::line_of(text, e.byte)) + ": malformed JSON (" +
                         e.what() + ")");
    }
    auto fail = [&](const std::string& field, const std::string& msg) -> InputError {
        return InputError(source + ": field '" + field + "': " + msg);
    };
    if (!j.is_object()) throw fail("<root>", "expected an object");
    for (const char* key : {"nodes", "edges", "excited", "measured"})
        if (!j.contains(key)) throw fail(key, "missing");
    if (!j["nodes"].is_number_integer() || j["nodes"].get<std::int64_t>() < 1)
        throw fail("nodes", "expected a positive integer");

    NetworkModel net;
    net.n = j["nodes"].get<std::size_t>();
    if (!j["edges"].is_array()) throw fail("edges", "expected an array");
    for (std::size_t k = 0; k < j["edges"].size(); ++k) {
        const auto& je = j["edges"][k];
        const std::string where = source + ": field 'edges[" + std::to_string(k) + "]";
        if (!je.is_object()) throw InputError(where + "': expected an object");
        for (const char* key : {"from", "to", "known"})
            if (!je.contains(key)) throw InputError(where + "." + key + "': missing");
        Edge e;
        e.from = detail::node_field(je["from"], where + ".from'", net.n);
        e.to = detail::node_field(je["to"], where + ".to'", net.n);
        if (!je["known"].is_boolean()) throw InputError(where + ".known': expected true or false");
        e.kind = je["known"].get<bool>() ? EdgeKind::Known : EdgeKind::Unknown;
        if (je.contains("value")) {
            if (!je["value"].is_number()) throw InputError(where + ".value': expected a number");
            e.value = je["value"].get<double>();
        }
        net.edges.push_back(e);
    }
    for (const char* key : {"excited", "measured"}) {
        if (!j[key].is_array()) throw fail(key, "expected an array");
        auto& dst = std::string(key) == "excited" ? net.excited : net.measured;
        for (std::size_t k = 0; k < j[key].size(); ++k)
            dst.push_back(detail::node_field(j[key][k], source + ": field '" + key + "[" + std::to_string(k) + "]'", net.n));
    }
    if (auto err = find_violation(net)) throw InputError(source + ": " + err->what());
    return net;
}

inline NetworkModel load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str(), path);
}

inline nlohmann::ordered_json network_to_json(const NetworkModel& net) {
    nlohmann::ordered_json j;
    j["nodes"] = net.n;
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : net.edges) {
        nlohmann::ordered_json je;
        je["from"] = e.from + 1;
        je["to"] = e.to + 1;
        je["known"] = e.known();
        if (e.value) je["value"] = *e.value;
        j["edges"].push_back(je);
    }
    auto one_based = [](const std::vector<NodeId>& v) {
        auto a = nlohmann::ordered_json::array();
        for (NodeId x : v) a.push_back(x + 1);
        return a;
    };
    j["excited"] = one_based(net.excited);
    j["measured"] = one_based(net.measured);
    return j;
}

inline std::string serialize_network(const NetworkModel& net) { return network_to_json(net).dump(2) + "\n"; }

inline void save_network(const NetworkModel& net, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open for writing");
    out << serialize_network(net);
    if (!out) throw InputError(path + ": write failed");
}

} // namespace netident

#endif
