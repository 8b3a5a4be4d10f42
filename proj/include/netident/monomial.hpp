#ifndef NETIDENT_MONOMIAL_HPP
#define NETIDENT_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "netident/netmodel.hpp"

namespace netident {

// Product of edge variables, stored as (edge index, multiplicity) pairs with
// strictly increasing indices and positive multiplicities.
class Monomial {
public:
    using Term = std::pair<std::size_t, std::uint32_t>;

    Monomial() = default;

    // Builds from an unsorted list of edge indices (repeats allowed).
    static Monomial from_edges(std::vector<std::size_t> ids) {
        std::sort(ids.begin(), ids.end());
        Monomial m;
        for (std::size_t id : ids) {
            if (!m.terms_.empty() && m.terms_.back().first == id)
                ++m.terms_.back().second;
            else
                m.terms_.emplace_back(id, 1);
        }
        m.degree_ = ids.size();
        return m;
    }

    static Monomial from_terms(std::initializer_list<Term> terms) {
        std::vector<std::size_t> ids;
        for (auto [id, mult] : terms)
            for (std::uint32_t k = 0; k < mult; ++k) ids.push_back(id);
        return from_edges(std::move(ids));
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t degree() const { return degree_; }
    bool empty() const { return terms_.empty(); }

    Monomial operator*(const Monomial& o) const {
        Monomial out;
        out.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first))
                out.terms_.push_back(*a++);
            else if (a == terms_.end() || b->first < a->first)
                out.terms_.push_back(*b++);
            else {
                out.terms_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        out.degree_ = degree_ + o.degree_;
        return out;
    }

    // True when every factor of *this appears in `other` at least as often.
    bool divides(const Monomial& other) const {
        auto b = other.terms_.begin();
        for (const auto& [id, mult] : terms_) {
            while (b != other.terms_.end() && b->first < id) ++b;
            if (b == other.terms_.end() || b->first != id || b->second < mult) return false;
        }
        return true;
    }

    // Graded order: lower degree first, then lexicographic on terms.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.terms_ < b.terms_;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // e.g. "G[2,1]^2*G[3,2]" with 1-based G[to,from]; "1" for the empty monomial.
    std::string to_string(const NetworkModel& net) const {
        if (terms_.empty()) return "1";
        std::string s;
        for (const auto& [id, mult] : terms_) {
            if (!s.empty()) s += "*";
            const Edge& e = net.edges[id];
            s += "G[" + std::to_string(e.to + 1) + "," + std::to_string(e.from + 1) + "]";
            if (mult > 1) s += "^" + std::to_string(mult);
        }
        return s;
    }

private:
    std::vector<Term> terms_;
    std::size_t degree_ = 0;
};

} // namespace netident

#endif
