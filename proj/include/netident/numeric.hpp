#ifndef NETIDENT_NUMERIC_HPP
#define NETIDENT_NUMERIC_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "netident/errors.hpp"
#include "netident/field.hpp"
#include "netident/matrix.hpp"
#include "netident/netmodel.hpp"
#include "netident/rng.hpp"

namespace netident {

inline constexpr int default_trials = 5;
inline constexpr int default_resample_budget = 10;

// A value for every edge of a network, indexed like net.edges.
template <typename T>
struct Evaluation {
    const NetworkModel* net = nullptr;
    std::vector<T> values;
};

// Uniform nonzero field values for every edge (known edges included).
inline Evaluation<Fp> random_exact_evaluation(const NetworkModel& net, Rng& rng) {
    Evaluation<Fp> ev{&net, {}};
    ev.values.reserve(net.edges.size());
    for (std::size_t k = 0; k < net.edges.size(); ++k) ev.values.push_back(Fp(1 + rng.below(Fp::modulus - 1)));
    return ev;
}

// Complex values with real and imaginary parts uniform in [-1, 1).
inline Evaluation<Complex> random_float_evaluation(const NetworkModel& net, Rng& rng) {
    Evaluation<Complex> ev{&net, {}};
    ev.values.reserve(net.edges.size());
    for (std::size_t k = 0; k < net.edges.size(); ++k) {
        const double re = 2.0 * rng.unit() - 1.0;
        const double im = 2.0 * rng.unit() - 1.0;
        ev.values.emplace_back(re, im);
    }
    return ev;
}

// G[to][from] = value of edge from -> to.
template <typename T>
Matrix<T> assemble_G(const Evaluation<T>& ev) {
    const NetworkModel& net = *ev.net;
    if (ev.values.size() != net.edges.size()) throw std::invalid_argument("assemble_G: evaluation is incomplete");
    Matrix<T> g(net.n, net.n);
    for (std::size_t k = 0; k < net.edges.size(); ++k) g(net.edges[k].to, net.edges[k].from) = ev.values[k];
    return g;
}

// Divides every value by 2*||G||_inf when ||G||_inf >= 1, which keeps the
// zero pattern and forces the spectral radius below one.
inline void stabilize(Evaluation<Complex>& ev) {
    const double norm = assemble_G(ev).norm_inf();
    if (norm >= 1.0)
        for (auto& v : ev.values) v /= 2.0 * norm;
}

// Rescales so that ||G||_inf <= target.
inline void scale_to_norm(Evaluation<Complex>& ev, double target) {
    const double norm = assemble_G(ev).norm_inf();
    if (norm > target)
        for (auto& v : ev.values) v *= target / norm;
}

// Gershgorin-type upper bound on the spectral radius.
template <typename T>
double spectral_radius_bound(const Matrix<T>& g) {
    double col_max = 0.0;
    for (std::size_t j = 0; j < g.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < g.rows(); ++i) s += ScalarTraits<T>::magnitude(g(i, j));
        col_max = std::max(col_max, s);
    }
    return std::min(g.norm_inf(), col_max);
}

// T(G) = (I - G)^{-1}. Throws SingularMatrix.
template <typename T>
Matrix<T> closed_loop(const Matrix<T>& g) {
    return inverse(Matrix<T>::identity(g.rows()) - g);
}

// I + G + G^2 + ... + G^L.
template <typename T>
Matrix<T> taylor_truncated_T(const Matrix<T>& g, int L) {
    Matrix<T> sum = Matrix<T>::identity(g.rows());
    Matrix<T> power = sum;
    for (int k = 1; k <= L; ++k) {
        power = power * g;
        sum = sum + power;
    }
    return sum;
}

// K with rows (b, c) at b_idx * n_C + c_idx and one column per unknown edge
// in canonical order: K[(b,c), a] = T_left[c, head(a)] * T_right[tail(a), b].
template <typename T>
struct KMatrix {
    Matrix<T> entries;
    std::vector<std::size_t> column_edges;  // indices into net.edges

    std::size_t rows() const { return entries.rows(); }
    std::size_t cols() const { return entries.cols(); }
};

template <typename T>
KMatrix<T> build_K(const NetworkModel& net, const Matrix<T>& t_left, const Matrix<T>& t_right) {
    KMatrix<T> k;
    k.column_edges = net.unknown_edge_ids();
    const std::size_t nb = net.n_excited(), nc = net.n_measured();
    k.entries = Matrix<T>(nb * nc, k.column_edges.size());
    for (std::size_t bi = 0; bi < nb; ++bi)
        for (std::size_t ci = 0; ci < nc; ++ci)
            for (std::size_t a = 0; a < k.column_edges.size(); ++a) {
                const Edge& e = net.edges[k.column_edges[a]];
                k.entries(bi * nc + ci, a) = t_left(net.measured[ci], e.to) * t_right(e.from, net.excited[bi]);
            }
    return k;
}

enum class RankMode { Local, Decoupled };

struct RankResult {
    std::size_t rank = 0;
    std::size_t unknowns = 0;
    std::vector<std::size_t> per_trial;  // rank seen in each trial that produced a sample
    int trials = 0;
    std::uint64_t seed = 0;
};

namespace detail {

// Samples T(G) over F_p, resampling when I - G is singular.
inline std::optional<Matrix<Fp>> sample_closed_loop(const NetworkModel& net, std::uint64_t seed, int trial, int side,
                                                    int budget) {
    for (int attempt = 0; attempt < budget; ++attempt) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(trial),
                              static_cast<std::uint64_t>(attempt) * 2 + static_cast<std::uint64_t>(side));
        auto ev = random_exact_evaluation(net, rng);
        try {
            return closed_loop(assemble_G(ev));
        } catch (const SingularMatrix&) {
        }
    }
    return std::nullopt;
}

// One K sample per trial; nullopt when the resample budget ran out.
inline std::optional<KMatrix<Fp>> sample_K(const NetworkModel& net, RankMode mode, std::uint64_t seed, int trial,
                                           int budget) {
    auto t_left = sample_closed_loop(net, seed, trial, 0, budget);
    if (!t_left) return std::nullopt;
    if (mode == RankMode::Local) return build_K(net, *t_left, *t_left);
    auto t_right = sample_closed_loop(net, seed, trial, 1, budget);
    if (!t_right) return std::nullopt;
    return build_K(net, *t_left, *t_right);
}

} // namespace detail

// Maximum exact rank of K over `trials` random points of F_p. In decoupled
// mode the two closed-loop factors come from independent evaluations.
// The result equals the generic rank unless every trial lands on the
// zero set of a nonzero minor (Schwartz-Zippel).
inline RankResult generic_rank(const NetworkModel& net, RankMode mode, int trials = default_trials,
                               std::uint64_t seed = 0, int resample_budget = default_resample_budget) {
    validate(net);
    if (trials < 1) throw std::invalid_argument("generic_rank: trials must be >= 1");
    RankResult out;
    out.unknowns = net.n_unknown();
    out.trials = trials;
    out.seed = seed;
    for (int t = 0; t < trials; ++t) {
        auto k = detail::sample_K(net, mode, seed, t, resample_budget);
        if (!k) continue;
        const std::size_t r = rank(k->entries);
        out.per_trial.push_back(r);
        out.rank = std::max(out.rank, r);
    }
    if (out.per_trial.empty()) throw AllSamplesSingular();
    return out;
}

// Whether det K is generically nonzero on a separable square network.
inline bool generic_det_nonzero(const NetworkModel& net, int trials = default_trials, std::uint64_t seed = 0,
                                int resample_budget = default_resample_budget) {
    validate(net);
    require_square(net);
    require_separable(net);
    if (trials < 1) throw std::invalid_argument("generic_det_nonzero: trials must be >= 1");
    bool sampled = false;
    for (int t = 0; t < trials; ++t) {
        auto k = detail::sample_K(net, RankMode::Local, seed, t, resample_budget);
        if (!k) continue;
        sampled = true;
        if (!determinant(k->entries).is_zero()) return true;
    }
    if (!sampled) throw AllSamplesSingular();
    return false;
}

} // namespace netident

#endif
