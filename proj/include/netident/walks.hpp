#ifndef NETIDENT_WALKS_HPP
#define NETIDENT_WALKS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netident/monomial.hpp"
#include "netident/netmodel.hpp"

namespace netident {

// Adjacency over a subset of a network's edges (stored as edge indices).
class EdgeSubgraph {
public:
    EdgeSubgraph(const NetworkModel& net, const std::vector<std::size_t>& edge_ids)
        : net_(&net), out_(net.n), in_(net.n) {
        for (std::size_t id : edge_ids) {
            out_[net.edges[id].from].push_back(id);
            in_[net.edges[id].to].push_back(id);
        }
        for (auto& v : out_) std::sort(v.begin(), v.end());
    }

    static EdgeSubgraph all_edges(const NetworkModel& net) {
        std::vector<std::size_t> ids(net.edges.size());
        for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;
        return EdgeSubgraph(net, ids);
    }

    const std::vector<std::size_t>& out_edges(NodeId v) const { return out_[v]; }
    const NetworkModel& net() const { return *net_; }

    // Nodes reachable from any of `sources` (sources included).
    std::vector<bool> forward_closure(const std::vector<NodeId>& sources) const { return closure(sources, true); }
    // Nodes from which some target is reachable (targets included).
    std::vector<bool> backward_closure(const std::vector<NodeId>& targets) const { return closure(targets, false); }

    bool has_cycle() const {
        // Kahn's algorithm over the subgraph.
        std::vector<std::size_t> indeg(net_->n, 0);
        for (NodeId v = 0; v < net_->n; ++v) indeg[v] = in_[v].size();
        std::vector<NodeId> stack;
        for (NodeId v = 0; v < net_->n; ++v)
            if (indeg[v] == 0) stack.push_back(v);
        std::size_t seen = 0;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            ++seen;
            for (std::size_t id : out_[v])
                if (--indeg[net_->edges[id].to] == 0) stack.push_back(net_->edges[id].to);
        }
        return seen != net_->n;
    }

private:
    std::vector<bool> closure(const std::vector<NodeId>& seeds, bool forward) const {
        std::vector<bool> mark(net_->n, false);
        std::vector<NodeId> stack;
        for (NodeId s : seeds)
            if (!mark[s]) {
                mark[s] = true;
                stack.push_back(s);
            }
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            for (std::size_t id : forward ? out_[v] : in_[v]) {
                NodeId w = forward ? net_->edges[id].to : net_->edges[id].from;
                if (!mark[w]) {
                    mark[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return mark;
    }

    const NetworkModel* net_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

// Excitation-to-measurement walk through exactly one unknown edge (the pivot).
// Edges may repeat. Known edges before the pivot lie in the excited block,
// those after it in the measured block.
struct Walk {
    std::vector<std::size_t> edges;  // edge indices in traversal order
    std::size_t pivot_pos = 0;       // position of the pivot in `edges`
    NodeId start = 0;
    NodeId end = 0;

    std::size_t pivot() const { return edges[pivot_pos]; }
    // Number of known edges, i.e. the degree of the walk's monomial.
    std::size_t degree() const { return edges.size() - 1; }

    Monomial monomial() const {
        std::vector<std::size_t> known;
        known.reserve(edges.size() - 1);
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (k != pivot_pos) known.push_back(edges[k]);
        return Monomial::from_edges(std::move(known));
    }

    // Visited nodes, from start to end.
    std::vector<NodeId> nodes(const NetworkModel& net) const {
        std::vector<NodeId> out{start};
        for (std::size_t id : edges) out.push_back(net.edges[id].to);
        return out;
    }

    // "1 -> 3 => 5 -> 6": 1-based nodes, the pivot drawn as "=>".
    std::string to_string(const NetworkModel& net) const {
        std::string s = std::to_string(start + 1);
        for (std::size_t k = 0; k < edges.size(); ++k)
            s += (k == pivot_pos ? " => " : " -> ") + std::to_string(net.edges[edges[k]].to + 1);
        return s;
    }

    friend bool operator==(const Walk&, const Walk&) = default;
    friend bool operator<(const Walk& a, const Walk& b) { return a.edges < b.edges; }
};

struct WalkList {
    std::vector<Walk> walks;  // sorted by edge sequence
    // Set when some walk was cut by a length bound, i.e. the list is not
    // all walks through the pivot.
    bool truncated = false;
};

namespace detail {

// Depth-first over all walks in `graph` from `source` of length <= max_len
// that stay inside `allowed`; on_hit sees every (node, walk-so-far).
// `truncated` is raised when an allowed continuation was cut by the bound.
template <typename OnHit>
void bounded_walks(const EdgeSubgraph& graph, NodeId source, std::size_t max_len, const std::vector<bool>& allowed,
                   OnHit&& on_hit, bool& truncated) {
    const NetworkModel& net = graph.net();
    std::vector<std::size_t> path;
    auto dfs = [&](auto&& self, NodeId v) -> void {
        on_hit(v, path);
        for (std::size_t id : graph.out_edges(v)) {
            const NodeId w = net.edges[id].to;
            if (!allowed[w]) continue;
            if (path.size() == max_len) {
                truncated = true;
                continue;
            }
            path.push_back(id);
            self(self, w);
            path.pop_back();
        }
    };
    if (allowed[source]) dfs(dfs, source);
}

} // namespace detail

// Walks b -> ... -> tail(pivot) => head(pivot) -> ... -> c for every excited b
// and measured c, prefix within the excited block (at most max_prefix edges)
// and suffix within the measured block (at most max_suffix edges). When
// max_total is given, walks with more known edges than that are dropped and
// counted as truncation.
inline WalkList enumerate_walks(const NetworkModel& net, const SeparableBlocks& blocks, std::size_t pivot,
                                std::size_t max_prefix, std::size_t max_suffix,
                                std::optional<std::size_t> max_total = std::nullopt) {
    const Edge& p = net.edges[pivot];
    if (!p.unknown() || !blocks.in_b(p.from) || !blocks.in_c(p.to))
        throw std::invalid_argument("enumerate_walks: pivot is not a cross edge");

    WalkList out;
    const EdgeSubgraph gb(net, blocks.gB_edges), gc(net, blocks.gC_edges);

    // Prefixes: forward search from each excited node, restricted to nodes
    // that can still reach the tail.
    const std::vector<bool> to_tail = gb.backward_closure({p.from});
    std::vector<std::pair<NodeId, std::vector<std::size_t>>> prefixes;
    for (NodeId b : net.excited) {
        if (!blocks.in_b(b)) continue;
        detail::bounded_walks(
            gb, b, max_prefix, to_tail,
            [&](NodeId v, const std::vector<std::size_t>& path) {
                if (v == p.from) prefixes.emplace_back(b, path);
            },
            out.truncated);
    }

    std::vector<bool> is_measured(net.n, false);
    for (NodeId c : net.measured) is_measured[c] = true;
    const std::vector<bool> to_meas = gc.backward_closure(net.measured);
    std::vector<std::pair<NodeId, std::vector<std::size_t>>> suffixes;
    if (blocks.in_c(p.to))
        detail::bounded_walks(
            gc, p.to, max_suffix, to_meas,
            [&](NodeId v, const std::vector<std::size_t>& path) {
                if (is_measured[v]) suffixes.emplace_back(v, path);
            },
            out.truncated);

    for (const auto& [b, pre] : prefixes)
        for (const auto& [c, suf] : suffixes) {
            if (max_total && pre.size() + suf.size() > *max_total) {
                out.truncated = true;
                continue;
            }
            Walk w;
            w.start = b;
            w.end = c;
            w.edges = pre;
            w.pivot_pos = pre.size();
            w.edges.push_back(pivot);
            w.edges.insert(w.edges.end(), suf.begin(), suf.end());
            out.walks.push_back(std::move(w));
        }
    std::sort(out.walks.begin(), out.walks.end());
    return out;
}

} // namespace netident

#endif
