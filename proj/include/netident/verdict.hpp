#ifndef NETIDENT_VERDICT_HPP
#define NETIDENT_VERDICT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netident/monomial.hpp"
#include "netident/walks.hpp"

namespace netident {

enum class Decision { Identifiable, NotIdentifiable, Inconclusive };
enum class Notion { LocalGeneric, DecoupledGeneric, GlobalSeparable };

inline const char* to_string(Decision d) {
    switch (d) {
    case Decision::Identifiable: return "identifiable";
    case Decision::NotIdentifiable: return "not-identifiable";
    case Decision::Inconclusive: return "inconclusive";
    }
    return "?";
}

inline const char* to_string(Notion n) {
    switch (n) {
    case Notion::LocalGeneric: return "local-generic";
    case Notion::DecoupledGeneric: return "decoupled-generic";
    case Notion::GlobalSeparable: return "global-separable";
    }
    return "?";
}

// A surviving monomial together with one path collection producing it.
struct CollectionWitness {
    Monomial monomial;
    std::int64_t repetition = 0;
    int sign = 1;  // sign of the witness collection
    std::vector<Walk> walks;  // one per unknown edge, in column order

    friend bool operator==(const CollectionWitness&, const CollectionWitness&) = default;
};

struct Evidence {
    std::optional<std::size_t> rank;  // rank-based routes
    std::size_t unknowns = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> max_degree;  // combinatorial route
    std::optional<bool> exhaustive;
    // Unknown edge whose K column vanishes identically (no walk through it).
    std::optional<std::size_t> zero_column;
    std::optional<CollectionWitness> collection;

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct Verdict {
    Decision decision = Decision::NotIdentifiable;
    Notion notion = Notion::LocalGeneric;
    Evidence evidence;

    bool identifiable() const { return decision == Decision::Identifiable; }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

} // namespace netident

#endif
