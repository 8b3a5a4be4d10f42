#ifndef NETIDENT_GENERATE_HPP
#define NETIDENT_GENERATE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netident/netmodel.hpp"
#include "netident/rng.hpp"

namespace netident {

struct GenOptions {
    std::size_t nodes = 6;
    double known_density = 0.3;  // probability of each admissible known edge
    std::size_t unknowns = 1;
    std::size_t excited = 1;
    std::size_t measured = 1;
    bool separable = false;
    bool acyclic = false;
    std::uint64_t seed = 0;
};

struct InfeasibleOptions : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

template <typename T>
std::vector<T> sample(std::vector<T> pool, std::size_t k, Rng& rng) {
    shuffle(pool, rng);
    pool.resize(k);
    return pool;
}

} // namespace detail

// Random valid network honoring the options; the same options give the
// same network. With `separable`, nodes are split into an excited part and
// a measured part first and every unknown edge crosses from the former to
// the latter. With `acyclic`, known edges follow a random topological order.
// Edge list order is shuffled.
inline NetworkModel generate_network(const GenOptions& opt) {
    if (opt.nodes < 1) throw InfeasibleOptions("need at least one node");
    if (opt.known_density < 0.0 || opt.known_density > 1.0) throw InfeasibleOptions("known density must be in [0, 1]");
    if (opt.excited > opt.nodes || opt.measured > opt.nodes) throw InfeasibleOptions("more excited/measured nodes than nodes");
    Rng rng(opt.seed);

    std::vector<NodeId> order(opt.nodes);
    std::iota(order.begin(), order.end(), NodeId{0});
    detail::shuffle(order, rng);
    std::vector<std::size_t> position(opt.nodes);
    for (std::size_t k = 0; k < opt.nodes; ++k) position[order[k]] = k;

    NetworkModel net;
    net.n = opt.nodes;
    auto add_known = [&](const std::vector<NodeId>& part) {
        for (NodeId u : part)
            for (NodeId v : part) {
                if (u == v || (opt.acyclic && position[u] > position[v])) continue;
                if (rng.bernoulli(opt.known_density)) net.edges.push_back({u, v, EdgeKind::Known, std::nullopt});
            }
    };

    if (opt.separable) {
        if (opt.excited + opt.measured > opt.nodes)
            throw InfeasibleOptions("separable networks need excited + measured <= nodes");
        std::vector<std::size_t> sizes;
        for (std::size_t nb = std::max<std::size_t>(opt.excited, 1); nb + std::max<std::size_t>(opt.measured, 1) <= opt.nodes;
             ++nb)
            if (nb * (opt.nodes - nb) >= opt.unknowns) sizes.push_back(nb);
        if (sizes.empty()) throw InfeasibleOptions("too many unknown edges for a separable split");
        const std::size_t nb = sizes[rng.below(sizes.size())];
        const std::vector<NodeId> b_part(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(nb));
        const std::vector<NodeId> c_part(order.begin() + static_cast<std::ptrdiff_t>(nb), order.end());
        std::vector<std::pair<NodeId, NodeId>> cross;
        for (NodeId u : b_part)
            for (NodeId v : c_part) cross.emplace_back(u, v);
        for (auto [u, v] : detail::sample(cross, opt.unknowns, rng))
            net.edges.push_back({u, v, EdgeKind::Unknown, std::nullopt});
        add_known(b_part);
        add_known(c_part);
        net.excited = detail::sample(b_part, opt.excited, rng);
        net.measured = detail::sample(c_part, opt.measured, rng);
    } else {
        std::vector<std::pair<NodeId, NodeId>> pairs;
        for (NodeId u = 0; u < opt.nodes; ++u)
            for (NodeId v = 0; v < opt.nodes; ++v)
                if (u != v && !(opt.acyclic && position[u] > position[v])) pairs.emplace_back(u, v);
        if (opt.unknowns > pairs.size()) throw InfeasibleOptions("too many unknown edges for the node count");
        detail::shuffle(pairs, rng);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [u, v] = pairs[k];
            if (k < opt.unknowns)
                net.edges.push_back({u, v, EdgeKind::Unknown, std::nullopt});
            else if (rng.bernoulli(opt.known_density))
                net.edges.push_back({u, v, EdgeKind::Known, std::nullopt});
        }
        net.excited = detail::sample(order, opt.excited, rng);
        net.measured = detail::sample(order, opt.measured, rng);
    }
    detail::shuffle(net.edges, rng);
    return net;
}

} // namespace netident

#endif
