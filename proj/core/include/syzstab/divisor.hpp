#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "syzstab/curve.hpp"

namespace syzstab {

/// Finite formal integer combination of places; the universal currency for
/// line-bundle classes. Zero coefficients are never stored.
class Divisor {
public:
    Divisor() = default;
    static Divisor of_place(const Place& P, std::int64_t mult = 1);

    const std::map<Place, std::int64_t>& support() const { return coeffs_; }
    std::int64_t coefficient(const Place& P) const;
    void add(const Place& P, std::int64_t mult);

    /// deg D = sum coeff * deg(place).
    std::int64_t degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_effective() const;

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator-() const;
    Divisor operator*(std::int64_t k) const;
    Divisor& operator+=(const Divisor& o) { return *this = *this + o; }

    /// Pointwise minimum of coefficients (zero off the supports).
    static Divisor min(const Divisor& a, const Divisor& b);

    bool operator==(const Divisor& o) const = default;
    std::string to_string() const;

private:
    std::map<Place, std::int64_t> coeffs_;
};

/// The principal divisor of a nonzero function: zeros and poles with
/// multiplicity. Always has degree 0.
Divisor divisor_of(const CurveFunction& fn);

}  // namespace syzstab
