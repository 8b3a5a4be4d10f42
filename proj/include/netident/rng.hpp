#ifndef NETIDENT_RNG_HPP
#define NETIDENT_RNG_HPP

#include <cstdint>
#include <random>

namespace netident {

// Seeded generator with platform-independent bounded draws.
// std::uniform_*_distribution is implementation-defined, so draws are
// derived from raw mt19937_64 output to keep files and reports identical
// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for (seed, a, b), e.g. (seed, trial, side).
    static Rng stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        Rng r(0);
        r.engine_.seed(seq);
        return r;
    }

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace netident

#endif
