#ifndef NETIDENT_FIELD_HPP
#define NETIDENT_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace netident {

// Element of the prime field F_p with p = 2^61 - 1 (a Mersenne prime).
// Values are kept reduced in [0, p).
class Fp {
public:
    static constexpr std::uint64_t modulus = (std::uint64_t{1} << 61) - 1;

    constexpr Fp() = default;
    constexpr explicit Fp(std::uint64_t v) : v_(reduce(v)) {}

    static constexpr Fp from_signed(std::int64_t v) {
        if (v >= 0) return Fp(static_cast<std::uint64_t>(v));
        return -Fp(static_cast<std::uint64_t>(-(v + 1)) + 1);
    }

    static constexpr Fp zero() { return Fp(); }
    static constexpr Fp one() { return Fp(1); }

    constexpr std::uint64_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    constexpr Fp operator+(Fp o) const {
        std::uint64_t s = v_ + o.v_;
        if (s >= modulus) s -= modulus;
        return raw(s);
    }
    constexpr Fp operator-(Fp o) const {
        return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + modulus - o.v_);
    }
    constexpr Fp operator-() const { return raw(v_ == 0 ? 0 : modulus - v_); }
    constexpr Fp operator*(Fp o) const {
        unsigned __int128 prod = static_cast<unsigned __int128>(v_) * o.v_;
        std::uint64_t lo = static_cast<std::uint64_t>(prod) & modulus;
        std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
        std::uint64_t s = lo + hi;
        if (s >= modulus) s -= modulus;
        return raw(s);
    }

    constexpr Fp& operator+=(Fp o) { return *this = *this + o; }
    constexpr Fp& operator-=(Fp o) { return *this = *this - o; }
    constexpr Fp& operator*=(Fp o) { return *this = *this * o; }

    constexpr Fp pow(std::uint64_t e) const {
        Fp base = *this, acc = one();
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Fermat inverse; zero has none.
    Fp inverse() const {
        if (is_zero()) throw std::domain_error("Fp: inverse of zero");
        return pow(modulus - 2);
    }
    Fp operator/(Fp o) const { return *this * o.inverse(); }

    friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.v_; }

private:
    static constexpr std::uint64_t reduce(std::uint64_t v) {
        v = (v & modulus) + (v >> 61);
        if (v >= modulus) v -= modulus;
        return v;
    }
    static constexpr Fp raw(std::uint64_t v) {
        Fp f;
        f.v_ = v;
        return f;
    }

    std::uint64_t v_ = 0;
};

} // namespace netident

#endif
