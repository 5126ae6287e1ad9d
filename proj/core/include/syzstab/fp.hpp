#pragma once

#include <cstdint>
#include <compare>

#include "syzstab/errors.hpp"

namespace syzstab {

/// Deterministic Miller-Rabin primality test, valid on the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Element of the prime field GF(p). The modulus travels with the value so
/// that plain operator arithmetic works; mixing moduli is a bug and is
/// checked. All arithmetic is exact, no rounding anywhere.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    /// Signed construction, e.g. from_int(-1, 11) == 10 mod 11.
    static Fp from_int(std::int64_t value, std::uint64_t p);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator/(const Fp& o) const;
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    std::strong_ordering operator<=>(const Fp& o) const = default;

private:
    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace syzstab
