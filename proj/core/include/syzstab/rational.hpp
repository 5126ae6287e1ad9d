#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "syzstab/errors.hpp"

namespace syzstab {

/// Exact rational number, always in lowest terms with positive denominator.
/// Slope ties are the crux of the strict-semistability boundary, so slopes
/// are never floats.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rational operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
    Rational operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
    Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw domain_error("Rational: division by zero");
        return Rational(num * o.den, den * o.num);
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    std::strong_ordering operator<=>(const Rational& o) const {
        __int128 l = static_cast<__int128>(num) * o.den;
        __int128 r = static_cast<__int128>(o.num) * den;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "5/2", or plain "2" when integral.
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace syzstab
