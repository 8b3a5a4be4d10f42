#ifndef NETIDENT_COMBINATORIAL_HPP
#define NETIDENT_COMBINATORIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netident/errors.hpp"
#include "netident/identifiability.hpp"
#include "netident/monomial.hpp"
#include "netident/netmodel.hpp"
#include "netident/verdict.hpp"
#include "netident/walks.hpp"

namespace netident {

struct NotBijectiveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Assignment of each unknown edge (in column order) to an (excitation index,
// measurement index) pair.
struct Assignation {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t n_excited = 0;
    std::size_t n_measured = 0;

    // Row of K hit by column k: b_idx * n_C + c_idx.
    std::vector<std::size_t> rows() const {
        std::vector<std::size_t> out;
        out.reserve(pairs.size());
        for (auto [b, c] : pairs) out.push_back(b * n_measured + c);
        return out;
    }
};

// Parity of a permutation given as its image vector, by cycle decomposition.
inline int permutation_sign(const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// Sign of the K permutation selected by an assignation. Throws
// NotBijectiveError unless the assignation is a bijection onto all rows.
inline int sign_of(const Assignation& a) {
    const std::size_t m = a.n_excited * a.n_measured;
    if (a.pairs.size() != m) throw NotBijectiveError("assignation size differs from n_B*n_C");
    std::vector<bool> hit(m, false);
    for (auto [b, c] : a.pairs) {
        if (b >= a.n_excited || c >= a.n_measured) throw NotBijectiveError("assignation pair out of range");
        const std::size_t row = b * a.n_measured + c;
        if (hit[row]) throw NotBijectiveError("two unknown edges share an (excitation, measurement) pair");
        hit[row] = true;
    }
    return permutation_sign(a.rows());
}

// One walk per unknown edge with pairwise distinct (start, end).
struct PathCollection {
    std::vector<Walk> walks;  // column order
    Assignation assignation;

    Monomial monomial() const {
        Monomial m;
        for (const Walk& w : walks) m = m * w.monomial();
        return m;
    }
    int sign() const { return sign_of(assignation); }
};

// Signed counts r(mu) of bijective collections per monomial, up to a degree bound.
struct RepetitionTable {
    std::map<Monomial, std::int64_t> repetition;  // zero entries retained
    std::size_t max_degree = 0;
    bool exhaustive = false;
    std::size_t collections = 0;
    // Unknown edge admitting no walk at all; the table is then empty.
    std::optional<std::size_t> empty_pivot;

    std::int64_t r(const Monomial& mu) const {
        auto it = repetition.find(mu);
        return it == repetition.end() ? 0 : it->second;
    }
};

namespace detail {

// Per-pivot walk lists plus their (start, end) row indices.
struct CollectionSpace {
    const NetworkModel* net = nullptr;
    std::vector<std::size_t> pivots;
    std::vector<WalkList> lists;
    std::vector<std::vector<std::size_t>> rows;       // rows[k][w]
    std::vector<std::vector<std::size_t>> by_degree;  // walk indices by (degree, lex)
    std::size_t n_excited = 0, n_measured = 0;

    CollectionSpace(const NetworkModel& net, const SeparableBlocks& blocks, std::size_t max_degree)
        : net(&net), pivots(net.unknown_edge_ids()), n_excited(net.n_excited()), n_measured(net.n_measured()) {
        std::vector<std::size_t> b_index(net.n, 0), c_index(net.n, 0);
        for (std::size_t i = 0; i < net.excited.size(); ++i) b_index[net.excited[i]] = i;
        for (std::size_t i = 0; i < net.measured.size(); ++i) c_index[net.measured[i]] = i;
        for (std::size_t p : pivots) {
            lists.push_back(enumerate_walks(net, blocks, p, max_degree, max_degree, max_degree));
            std::vector<std::size_t> r;
            for (const Walk& w : lists.back().walks) r.push_back(b_index[w.start] * n_measured + c_index[w.end]);
            rows.push_back(std::move(r));
            const auto& walks = lists.back().walks;
            std::vector<std::size_t> idx(walks.size());
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            std::stable_sort(idx.begin(), idx.end(),
                             [&](std::size_t a, std::size_t b) { return walks[a].degree() < walks[b].degree(); });
            by_degree.push_back(std::move(idx));
        }
    }

    // Depth-first product over pivots in column order. With lexicographic
    // order, walks are tried in sorted order so collections are visited
    // lexicographically; otherwise by increasing degree, which allows
    // cutting a level at the first walk over budget. `admit` may veto a
    // partial collection given the running edge counts; `leaf` receives each
    // complete bijective collection as (walk choice, row permutation, edge
    // counts, degree) and returns false to stop.
    template <typename Admit, typename Leaf>
    void for_each(std::size_t max_degree, bool lexicographic, bool& pruned, Admit&& admit, Leaf&& leaf) const {
        const std::size_t m = pivots.size();
        std::vector<bool> used(n_excited * n_measured, false);
        std::vector<std::size_t> choice(m), perm(m);
        std::vector<std::uint32_t> counts(net->edges.size(), 0);
        bool stop = false;
        auto dfs = [&](auto&& self, std::size_t k, std::size_t degree) -> void {
            if (k == m) {
                if (!leaf(choice, perm, counts, degree)) stop = true;
                return;
            }
            const auto& walks = lists[k].walks;
            for (std::size_t i = 0; i < walks.size() && !stop; ++i) {
                const std::size_t w = lexicographic ? i : by_degree[k][i];
                const Walk& walk = walks[w];
                if (degree + walk.degree() > max_degree) {
                    pruned = true;
                    if (lexicographic) continue;
                    break;
                }
                const std::size_t row = rows[k][w];
                if (used[row]) continue;
                for (std::size_t e = 0; e < walk.edges.size(); ++e)
                    if (e != walk.pivot_pos) ++counts[walk.edges[e]];
                if (admit(counts)) {
                    used[row] = true;
                    choice[k] = w;
                    perm[k] = row;
                    self(self, k + 1, degree + walk.degree());
                    used[row] = false;
                }
                for (std::size_t e = 0; e < walk.edges.size(); ++e)
                    if (e != walk.pivot_pos) --counts[walk.edges[e]];
            }
        };
        dfs(dfs, 0, 0);
    }

    Monomial monomial_of(const std::vector<std::uint32_t>& counts) const {
        std::vector<std::size_t> ids;
        for (std::size_t e = 0; e < counts.size(); ++e)
            for (std::uint32_t k = 0; k < counts[e]; ++k) ids.push_back(e);
        return Monomial::from_edges(std::move(ids));
    }

    PathCollection collection(const std::vector<std::size_t>& choice) const {
        PathCollection pc;
        pc.assignation.n_excited = n_excited;
        pc.assignation.n_measured = n_measured;
        for (std::size_t k = 0; k < choice.size(); ++k) {
            const std::size_t row = rows[k][choice[k]];
            pc.walks.push_back(lists[k].walks[choice[k]]);
            pc.assignation.pairs.emplace_back(row / n_measured, row % n_measured);
        }
        return pc;
    }
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("repetition count overflow");
    return out;
}

inline std::optional<std::size_t> empty_pivot(const NetworkModel& net, const SeparableBlocks& blocks) {
    return structural_zero_column(net, EdgeSubgraph(net, blocks.gB_edges), EdgeSubgraph(net, blocks.gC_edges));
}

inline std::size_t default_max_degree(const NetworkModel& net) { return 2 * net.n; }

} // namespace detail

// Enumerates every bijective path collection with monomial degree
// <= max_degree and sums collection signs per monomial.
inline RepetitionTable repetition_table(const NetworkModel& net, std::size_t max_degree) {
    validate(net);
    const SeparableBlocks blocks = require_separable(net);
    require_square(net);
    RepetitionTable table;
    table.max_degree = max_degree;
    if ((table.empty_pivot = detail::empty_pivot(net, blocks))) {
        table.exhaustive = true;
        return table;
    }
    const detail::CollectionSpace space(net, blocks, max_degree);
    bool pruned = false;
    for (const auto& list : space.lists) pruned = pruned || list.truncated;
    space.for_each(
        max_degree, false, pruned, [](const auto&) { return true; },
        [&](const auto&, const std::vector<std::size_t>& perm, const std::vector<std::uint32_t>& counts, std::size_t) {
            auto& slot = table.repetition[space.monomial_of(counts)];
            slot = detail::checked_add(slot, permutation_sign(perm));
            ++table.collections;
            return true;
        });
    table.exhaustive = !pruned;
    return table;
}

// Lexicographically smallest collection with monomial `mu` and sign `sign`.
inline std::optional<PathCollection> find_collection(const NetworkModel& net, std::size_t max_degree,
                                                     const Monomial& mu, int sign) {
    const SeparableBlocks blocks = require_separable(net);
    const detail::CollectionSpace space(net, blocks, max_degree);
    std::vector<std::uint32_t> target(net.edges.size(), 0);
    for (auto [id, mult] : mu.terms()) target[id] = mult;
    std::optional<PathCollection> found;
    bool pruned = false;
    space.for_each(
        mu.degree(), true, pruned,
        [&](const std::vector<std::uint32_t>& counts) {
            for (std::size_t e = 0; e < counts.size(); ++e)
                if (counts[e] > target[e]) return false;
            return true;
        },
        [&](const std::vector<std::size_t>& choice, const std::vector<std::size_t>& perm,
            const std::vector<std::uint32_t>& counts, std::size_t) {
            if (counts != target || permutation_sign(perm) != sign) return true;
            found = space.collection(choice);
            return false;
        });
    return found;
}

// Decides global identifiability of a separable square network from the
// repetition table: some r(mu) != 0 certifies identifiability; an
// exhaustive all-zero table refutes it; otherwise the bound was too low.
inline Verdict verdict_from_table(const NetworkModel& net, const RepetitionTable& table) {
    const std::size_t bound = table.max_degree;
    Verdict v;
    v.notion = Notion::GlobalSeparable;
    v.evidence.unknowns = net.n_unknown();
    v.evidence.max_degree = bound;
    v.evidence.exhaustive = table.exhaustive;
    v.evidence.zero_column = table.empty_pivot;

    for (const auto& [mu, r] : table.repetition) {
        if (r == 0) continue;
        v.decision = Decision::Identifiable;
        CollectionWitness w;
        w.monomial = mu;
        w.repetition = r;
        w.sign = r > 0 ? 1 : -1;
        auto pc = find_collection(net, bound, mu, w.sign);
        if (!pc) throw std::logic_error("combinatorial_verdict: no collection realizes a surviving monomial");
        w.walks = std::move(pc->walks);
        v.evidence.collection = std::move(w);
        return v;
    }
    v.decision = table.exhaustive ? Decision::NotIdentifiable : Decision::Inconclusive;
    return v;
}

inline Verdict combinatorial_verdict(const NetworkModel& net, std::optional<std::size_t> max_degree = std::nullopt) {
    return verdict_from_table(net, repetition_table(net, max_degree.value_or(detail::default_max_degree(net))));
}

// The combinatorial test applied to the decoupled network, for any topology.
// NotIdentifiable here rules out generic local identifiability of `net`;
// Identifiable certifies only decoupled identifiability.
inline Verdict necessary_condition_any_topology(const NetworkModel& net,
                                                std::optional<std::size_t> max_degree = std::nullopt,
                                                std::uint64_t seed = 0) {
    Verdict v = combinatorial_verdict(decouple(net, seed), max_degree);
    v.notion = Notion::DecoupledGeneric;
    v.evidence.seed = seed;
    return v;
}

} // namespace netident

#endif
