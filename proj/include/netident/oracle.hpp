#ifndef NETIDENT_ORACLE_HPP
#define NETIDENT_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netident/errors.hpp"
#include "netident/field.hpp"
#include "netident/monomial.hpp"
#include "netident/netmodel.hpp"

namespace netident {

// Sparse polynomial over the integers in edge variables.
// No zero coefficients are stored. Arithmetic throws std::overflow_error.
class Poly {
public:
    Poly() = default;

    static Poly constant(std::int64_t c) {
        Poly p;
        if (c != 0) p.terms_[Monomial()] = c;
        return p;
    }
    static Poly variable(std::size_t edge) {
        Poly p;
        p.terms_[Monomial::from_edges({edge})] = 1;
        return p;
    }
    static Poly term(const Monomial& m, std::int64_t c) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coefficient(const Monomial& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? 0 : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) accumulate(m, c);
        return *this;
    }
    Poly operator+(const Poly& o) const {
        Poly out = *this;
        return out += o;
    }
    Poly operator-() const {
        Poly out;
        for (const auto& [m, c] : terms_) out.terms_[m] = checked_mul(c, -1);
        return out;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    // Product with terms of degree > max_degree dropped.
    Poly multiply(const Poly& o, std::optional<std::size_t> max_degree = std::nullopt) const {
        Poly out;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                if (max_degree && ma.degree() + mb.degree() > *max_degree) continue;
                out.accumulate(ma * mb, checked_mul(ca, cb));
            }
        return out;
    }
    Poly operator*(const Poly& o) const { return multiply(o); }

    Poly truncated(std::size_t max_degree) const {
        Poly out;
        for (const auto& [m, c] : terms_)
            if (m.degree() <= max_degree) out.terms_.emplace(m, c);
        return out;
    }

    // Value at a point of F_p; `point` is indexed by edge.
    Fp evaluate(const std::vector<Fp>& point) const {
        Fp sum;
        for (const auto& [m, c] : terms_) {
            Fp t = Fp::from_signed(c);
            for (auto [id, mult] : m.terms()) t *= point.at(id).pow(mult);
            sum += t;
        }
        return sum;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t out;
        if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Poly: coefficient overflow");
        return out;
    }
    void accumulate(const Monomial& m, std::int64_t c) {
        auto [it, inserted] = terms_.try_emplace(m, 0);
        std::int64_t sum;
        if (__builtin_add_overflow(it->second, c, &sum)) throw std::overflow_error("Poly: coefficient overflow");
        if (sum == 0)
            terms_.erase(it);
        else
            it->second = sum;
    }

    std::map<Monomial, std::int64_t> terms_;
};

inline std::int64_t coefficient(const Poly& p, const Monomial& mu) { return p.coefficient(mu); }

using PolyMatrix = std::vector<std::vector<Poly>>;  // [row][col]

enum class BlockSide { B, C };

// Truncated closed loop of one known block: entry [j][i] is the sum over
// walks i -> j of length <= L inside the block of the product of edge
// variables, computed as I + G + ... + G^L with polynomial entries.
inline PolyMatrix symbolic_T_truncated(const NetworkModel& net, const SeparableBlocks& blocks, BlockSide side,
                                       std::size_t L) {
    const std::size_t n = net.n;
    const auto& ids = side == BlockSide::B ? blocks.gB_edges : blocks.gC_edges;
    PolyMatrix g(n, std::vector<Poly>(n));
    for (std::size_t id : ids) g[net.edges[id].to][net.edges[id].from] = Poly::variable(id);

    PolyMatrix sum(n, std::vector<Poly>(n)), power(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) sum[i][i] = power[i][i] = Poly::constant(1);
    for (std::size_t k = 1; k <= L; ++k) {
        PolyMatrix next(n, std::vector<Poly>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m) {
                if (g[i][m].is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!power[m][j].is_zero()) next[i][j] += g[i][m] * power[m][j];
            }
        bool all_zero = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!next[i][j].is_zero()) all_zero = false;
                sum[i][j] += next[i][j];
            }
        power = std::move(next);
        if (all_zero) break;  // nilpotent block
    }
    return sum;
}

inline constexpr std::size_t oracle_max_unknowns = 6;

namespace detail {

// Sign via inversion count.
inline int inversion_sign(const std::vector<std::size_t>& perm) {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace detail

// Symbolic K of a separable square network with block closed loops
// truncated at L: K[(b,c), a] = T_C[c, head(a)] * T_B[tail(a), b].
inline PolyMatrix symbolic_K_truncated(const NetworkModel& net, std::size_t L) {
    validate(net);
    const SeparableBlocks blocks = require_separable(net);
    require_square(net);
    const PolyMatrix tb = symbolic_T_truncated(net, blocks, BlockSide::B, L);
    const PolyMatrix tc = symbolic_T_truncated(net, blocks, BlockSide::C, L);
    const auto cols = net.unknown_edge_ids();
    const std::size_t nc = net.n_measured();
    PolyMatrix k(net.n_excited() * nc, std::vector<Poly>(cols.size()));
    for (std::size_t bi = 0; bi < net.n_excited(); ++bi)
        for (std::size_t ci = 0; ci < nc; ++ci)
            for (std::size_t a = 0; a < cols.size(); ++a) {
                const Edge& e = net.edges[cols[a]];
                k[bi * nc + ci][a] = tc[net.measured[ci]][e.to].multiply(tb[e.from][net.excited[bi]], L);
            }
    return k;
}

// Leibniz expansion of det K over all m°! permutations, keeping monomials
// of degree <= L. Those coefficients are exact: omitted walk terms only
// contribute degrees above L.
inline Poly symbolic_detK_truncated(const NetworkModel& net, std::size_t L) {
    if (net.n_unknown() > oracle_max_unknowns)
        throw TooLargeError("oracle supports at most " + std::to_string(oracle_max_unknowns) + " unknown edges");
    const PolyMatrix k = symbolic_K_truncated(net, L);
    const std::size_t m = net.n_unknown();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Poly det;
    do {
        Poly term = Poly::constant(detail::inversion_sign(perm));
        for (std::size_t col = 0; col < m && !term.is_zero(); ++col) term = term.multiply(k[perm[col]][col], L);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace netident

#endif
