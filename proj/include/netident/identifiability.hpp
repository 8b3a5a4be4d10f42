#ifndef NETIDENT_IDENTIFIABILITY_HPP
#define NETIDENT_IDENTIFIABILITY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "netident/errors.hpp"
#include "netident/netmodel.hpp"
#include "netident/numeric.hpp"
#include "netident/verdict.hpp"
#include "netident/walks.hpp"

namespace netident {

// First unknown edge (canonical order) whose tail no excitation reaches or
// whose head reaches no measurement, using the given edges for paths.
// Such a column of K is zero for every evaluation.
inline std::optional<std::size_t> structural_zero_column(const NetworkModel& net, const EdgeSubgraph& tail_side,
                                                         const EdgeSubgraph& head_side) {
    const auto from_excited = tail_side.forward_closure(net.excited);
    const auto to_measured = head_side.backward_closure(net.measured);
    for (std::size_t id : net.unknown_edge_ids()) {
        const Edge& e = net.edges[id];
        if (!from_excited[e.from] || !to_measured[e.to]) return id;
    }
    return std::nullopt;
}

namespace detail {

inline void require_unknowns(const NetworkModel& net) {
    if (net.n_unknown() == 0) throw std::invalid_argument("identifiability query needs at least one unknown edge");
}

inline Verdict rank_verdict(const NetworkModel& net, RankMode mode, int trials, std::uint64_t seed) {
    validate(net);
    require_unknowns(net);
    Verdict v;
    v.notion = mode == RankMode::Local ? Notion::LocalGeneric : Notion::DecoupledGeneric;
    const RankResult r = generic_rank(net, mode, trials, seed);
    v.evidence.rank = r.rank;
    v.evidence.unknowns = r.unknowns;
    v.evidence.trials = trials;
    v.evidence.seed = seed;
    v.decision = r.rank == r.unknowns ? Decision::Identifiable : Decision::NotIdentifiable;
    if (!v.identifiable()) {
        // In both modes each factor of T is supported on paths of the full graph.
        const auto all = EdgeSubgraph::all_edges(net);
        v.evidence.zero_column = structural_zero_column(net, all, all);
    }
    return v;
}

} // namespace detail

// Generic local identifiability: rank K = m° at a random point.
inline Verdict local_identifiability(const NetworkModel& net, int trials = default_trials, std::uint64_t seed = 0) {
    return detail::rank_verdict(net, RankMode::Local, trials, seed);
}

// Generic decoupled identifiability: as above with independent samples for
// the two closed-loop factors.
inline Verdict decoupled_identifiability(const NetworkModel& net, int trials = default_trials, std::uint64_t seed = 0) {
    return detail::rank_verdict(net, RankMode::Decoupled, trials, seed);
}

// Generic global identifiability of a separable square network via det K.
inline Verdict separable_global(const NetworkModel& net, int trials = default_trials, std::uint64_t seed = 0) {
    validate(net);
    detail::require_unknowns(net);
    const SeparableBlocks blocks = require_separable(net);
    require_square(net);
    Verdict v;
    v.notion = Notion::GlobalSeparable;
    v.evidence.unknowns = net.n_unknown();
    v.evidence.trials = trials;
    v.evidence.seed = seed;
    const bool nonzero = generic_det_nonzero(net, trials, seed);
    v.evidence.rank = nonzero ? net.n_unknown() : generic_rank(net, RankMode::Local, trials, seed).rank;
    v.decision = nonzero ? Decision::Identifiable : Decision::NotIdentifiable;
    if (!nonzero)
        v.evidence.zero_column = structural_zero_column(net, EdgeSubgraph(net, blocks.gB_edges),
                                                        EdgeSubgraph(net, blocks.gC_edges));
    return v;
}

// Whether decoupled identifiability of `net` agrees with global
// identifiability of its decoupled network. Expected to hold always.
inline bool check_prop_equivalence(const NetworkModel& net, int trials = default_trials, std::uint64_t seed = 0) {
    const Verdict dec = decoupled_identifiability(net, trials, seed);
    const Verdict glob = separable_global(decouple(net, seed), trials, seed);
    return dec.decision == glob.decision;
}

} // namespace netident

#endif
