#ifndef NETIDENT_NETMODEL_HPP
#define NETIDENT_NETMODEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace netident {

using NodeId = std::size_t;

enum class EdgeKind { Known, Unknown };

// Edge from -> to carries the transfer G[to][from].
struct Edge {
    NodeId from = 0;
    NodeId to = 0;
    EdgeKind kind = EdgeKind::Known;
    std::optional<double> value;

    bool known() const { return kind == EdgeKind::Known; }
    bool unknown() const { return kind == EdgeKind::Unknown; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

// A network with partial excitation and measurement. The order of `edges`
// is significant: unknown edges, in list order, index the columns of K.
struct NetworkModel {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::vector<NodeId> excited;
    std::vector<NodeId> measured;

    std::size_t n_excited() const { return excited.size(); }
    std::size_t n_measured() const { return measured.size(); }

    std::size_t n_unknown() const {
        return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return e.unknown(); }));
    }

    // Indices into `edges` of the unknown edges, in canonical column order.
    std::vector<std::size_t> unknown_edge_ids() const {
        std::vector<std::size_t> ids;
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (edges[k].unknown()) ids.push_back(k);
        return ids;
    }

    bool is_square() const { return n_excited() * n_measured() == n_unknown(); }

    friend bool operator==(const NetworkModel&, const NetworkModel&) = default;
};

enum class ValidationErrorKind { SelfLoop, DuplicateEdge, IndexOutOfRange, DuplicateExcitation, DuplicateMeasurement };

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationErrorKind kind, std::string what, std::vector<NodeId> nodes)
        : std::runtime_error(std::move(what)), kind_(kind), nodes_(std::move(nodes)) {}

    ValidationErrorKind kind() const { return kind_; }
    // Offending node(s), 0-based.
    const std::vector<NodeId>& nodes() const { return nodes_; }

private:
    ValidationErrorKind kind_;
    std::vector<NodeId> nodes_;
};

namespace detail {

inline std::string one_based(NodeId v) { return std::to_string(v + 1); }

inline ValidationError make_error(ValidationErrorKind kind, const std::string& msg, std::vector<NodeId> nodes) {
    return ValidationError(kind, msg, std::move(nodes));
}

} // namespace detail

// First violated invariant, if any. Messages use 1-based node numbers.
inline std::optional<ValidationError> find_violation(const NetworkModel& net) {
    using detail::one_based;
    for (std::size_t k = 0; k < net.edges.size(); ++k) {
        const Edge& e = net.edges[k];
        if (e.from >= net.n || e.to >= net.n) {
            NodeId bad = e.from >= net.n ? e.from : e.to;
            return detail::make_error(ValidationErrorKind::IndexOutOfRange,
                                      "edge " + std::to_string(k + 1) + " references node " + one_based(bad) +
                                          " outside 1.." + std::to_string(net.n),
                                      {bad});
        }
        if (e.from == e.to)
            return detail::make_error(ValidationErrorKind::SelfLoop, "self-loop at node " + one_based(e.from), {e.from});
    }
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Edge& e : net.edges)
        if (!seen.emplace(e.from, e.to).second)
            return detail::make_error(ValidationErrorKind::DuplicateEdge,
                                      "duplicate edge " + one_based(e.from) + "->" + one_based(e.to), {e.from, e.to});

    auto check_set = [&](const std::vector<NodeId>& nodes, ValidationErrorKind dup_kind,
                         const char* label) -> std::optional<ValidationError> {
        std::set<NodeId> s;
        for (NodeId v : nodes) {
            if (v >= net.n)
                return detail::make_error(ValidationErrorKind::IndexOutOfRange,
                                          std::string(label) + " node " + one_based(v) + " outside 1.." + std::to_string(net.n), {v});
            if (!s.insert(v).second)
                return detail::make_error(dup_kind, std::string("node ") + one_based(v) + " listed twice as " + label, {v});
        }
        return std::nullopt;
    };
    if (auto err = check_set(net.excited, ValidationErrorKind::DuplicateExcitation, "excited")) return err;
    if (auto err = check_set(net.measured, ValidationErrorKind::DuplicateMeasurement, "measured")) return err;
    return std::nullopt;
}

// Throws ValidationError on the first violated invariant.
inline void validate(const NetworkModel& net) {
    if (auto err = find_violation(net)) throw *err;
}

// ---------------------------------------------------------------------------
// Separability

enum class Part { B, C };

// Bipartition of a separable network: G = [[G_C, G_cross], [0, G_B]].
// Edge lists hold indices into the network's edge list.
struct SeparableBlocks {
    std::vector<Part> part;  // per node
    std::vector<NodeId> b_part;
    std::vector<NodeId> c_part;
    std::vector<std::size_t> gB_edges;
    std::vector<std::size_t> gC_edges;
    std::vector<std::size_t> cross_edges;

    bool in_b(NodeId v) const { return part[v] == Part::B; }
    bool in_c(NodeId v) const { return part[v] == Part::C; }
};

struct NotSeparable {
    enum class Witness { NodeConflict, EdgeViolation };
    Witness witness = Witness::NodeConflict;
    NodeId node = 0;          // conflicting node (NodeConflict)
    std::size_t edge = 0;     // violating edge index (EdgeViolation)
    std::string reason;
};

using SeparabilityResult = std::variant<SeparableBlocks, NotSeparable>;

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace detail

// Finds a bipartition realizing the separable block structure, or a witness
// that none exists. Components of the undirected known-edge graph are
// labelled B (excited nodes, unknown-edge tails) or C (measured nodes,
// unknown-edge heads); unlabelled components go to B.
inline SeparabilityResult is_separable(const NetworkModel& net) {
    using detail::one_based;
    const std::size_t n = net.n;
    detail::DisjointSets dsu(n);
    for (const Edge& e : net.edges)
        if (e.known()) dsu.unite(e.from, e.to);

    std::vector<bool> wants_b(n, false), wants_c(n, false);
    std::vector<NodeId> b_reason(n), c_reason(n);
    auto mark = [&](NodeId v, bool to_b) {
        const std::size_t root = dsu.find(v);
        auto& flag = to_b ? wants_b : wants_c;
        auto& who = to_b ? b_reason : c_reason;
        if (!flag[root]) {
            flag[root] = true;
            who[root] = v;
        }
    };
    for (NodeId v : net.excited) mark(v, true);
    for (NodeId v : net.measured) mark(v, false);
    for (const Edge& e : net.edges)
        if (e.unknown()) {
            mark(e.from, true);
            mark(e.to, false);
        }

    // Report the smallest node whose component carries both labels.
    for (NodeId v = 0; v < n; ++v) {
        const std::size_t root = dsu.find(v);
        if (wants_b[root] && wants_c[root]) {
            NotSeparable ns;
            ns.witness = NotSeparable::Witness::NodeConflict;
            const NodeId a = b_reason[root], c = c_reason[root];
            ns.node = a == c ? a : std::min(a, c);
            if (a == c)
                ns.reason = "node " + one_based(a) + " must lie in both the excited and the measured part";
            else
                ns.reason = "nodes " + one_based(a) + " (excited side) and " + one_based(c) +
                            " (measured side) are joined by known edges";
            return ns;
        }
    }

    SeparableBlocks blocks;
    blocks.part.resize(n);
    for (NodeId v = 0; v < n; ++v) {
        blocks.part[v] = wants_c[dsu.find(v)] ? Part::C : Part::B;
        (blocks.part[v] == Part::B ? blocks.b_part : blocks.c_part).push_back(v);
    }
    for (std::size_t k = 0; k < net.edges.size(); ++k) {
        const Edge& e = net.edges[k];
        const Part pf = blocks.part[e.from], pt = blocks.part[e.to];
        const bool ok = e.known() ? pf == pt : (pf == Part::B && pt == Part::C);
        if (!ok) {
            NotSeparable ns;
            ns.witness = NotSeparable::Witness::EdgeViolation;
            ns.edge = k;
            ns.node = e.from;
            ns.reason = "edge " + one_based(e.from) + "->" + one_based(e.to) + " breaks the block structure";
            return ns;
        }
        if (e.unknown())
            blocks.cross_edges.push_back(k);
        else
            (pf == Part::B ? blocks.gB_edges : blocks.gC_edges).push_back(k);
    }
    return blocks;
}

inline const SeparableBlocks* as_blocks(const SeparabilityResult& r) { return std::get_if<SeparableBlocks>(&r); }
// The result would dangle.
const SeparableBlocks* as_blocks(SeparabilityResult&&) = delete;

// ---------------------------------------------------------------------------
// Decoupled network

// Builds the 2n-node decoupled network: nodes 0..n-1 copy every edge as
// known (measured side), nodes n..2n-1 copy the topology again as known
// (excited side), and each unknown j->i becomes the unknown (n+j)->i.
// Edge values are not carried over; `seed` only namespaces later
// evaluations of the excited copy and does not affect the structure.
inline NetworkModel decouple(const NetworkModel& net, std::uint64_t /*seed*/ = 0) {
    validate(net);
    NetworkModel out;
    out.n = 2 * net.n;
    for (const Edge& e : net.edges) out.edges.push_back({e.from, e.to, EdgeKind::Known, std::nullopt});
    for (const Edge& e : net.edges) out.edges.push_back({net.n + e.from, net.n + e.to, EdgeKind::Known, std::nullopt});
    for (const Edge& e : net.edges)
        if (e.unknown()) out.edges.push_back({net.n + e.from, e.to, EdgeKind::Unknown, std::nullopt});
    for (NodeId b : net.excited) out.excited.push_back(net.n + b);
    out.measured = net.measured;
    return out;
}

} // namespace netident

#endif
