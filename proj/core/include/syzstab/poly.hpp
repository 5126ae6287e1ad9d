#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "syzstab/fp.hpp"

namespace syzstab {

/// Univariate polynomial over GF(p), coefficients stored low degree first
/// with no trailing zeros. The zero polynomial has an empty coefficient
/// vector and degree -1.
class Poly {
public:
    explicit Poly(std::uint64_t p) : p_(p) {}
    Poly(std::uint64_t p, const std::vector<std::uint64_t>& coeffs);
    Poly(std::uint64_t p, std::vector<Fp> coeffs);

    static Poly constant(std::uint64_t p, std::uint64_t c) { return Poly(p, std::vector<std::uint64_t>{c}); }
    static Poly x(std::uint64_t p) { return monomial(p, 1, 1); }
    static Poly monomial(std::uint64_t p, int degree, std::uint64_t coeff);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return degree() == 0 && c_[0].value() == 1; }
    bool is_monic() const { return !is_zero() && leading().value() == 1; }

    /// Coefficient of x^i; zero beyond the degree.
    Fp coeff(int i) const;
    Fp leading() const;
    const std::vector<Fp>& coeffs() const { return c_; }
    std::vector<std::uint64_t> coeff_values() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Fp& s) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Euclidean division; throws domain_error on division by zero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly operator/(const Poly& o) const { return divmod(o).first; }
    Poly operator%(const Poly& o) const { return divmod(o).second; }
    bool divides(const Poly& multiple) const;

    Poly monic() const;
    Poly derivative() const;
    Poly shift(int k) const;  // multiply by x^k, k >= 0
    Fp eval(const Fp& at) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }
    std::strong_ordering operator<=>(const Poly& o) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();

    std::uint64_t p_;
    std::vector<Fp> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic unless both zero

/// g = gcd(a, b) monic with g = s*a + t*b.
struct ExtendedGcd {
    Poly g, s, t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// base^e mod m, e >= 0.
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m);

/// Multiplicity of the irreducible u in a nonzero polynomial.
int order_at(const Poly& poly, const Poly& u);

bool is_squarefree(const Poly& f);
bool is_irreducible(const Poly& f);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted canonically. Squarefree decomposition, then distinct-degree
/// splitting, then seeded Cantor-Zassenhaus equal-degree splitting, so
/// repeated runs return identical output. Throws on the zero polynomial.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

/// All monic irreducibles of exactly the given degree, sorted.
std::vector<Poly> monic_irreducibles(std::uint64_t p, int degree);

}  // namespace syzstab
