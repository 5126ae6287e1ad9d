#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syzstab/poly.hpp"

namespace syzstab {

/// Smooth odd-degree ("imaginary") hyperelliptic model y^2 = f(x) over GF(p),
/// p an odd prime, f monic squarefree of degree 2g+1, genus g >= 2. There is
/// exactly one place at infinity and it has degree 1. Immutable; copies share
/// the underlying data.
class HyperellipticCurve {
public:
    /// Validates every model invariant; throws domain_error naming the
    /// violated one.
    static HyperellipticCurve create(std::uint64_t p, const Poly& f);

    std::uint64_t p() const { return d_->p; }
    const Poly& f() const { return d_->f; }
    int genus() const { return d_->genus; }

    bool operator==(const HyperellipticCurve& o) const {
        return d_ == o.d_ || (p() == o.p() && f() == o.f());
    }

private:
    struct Data {
        std::uint64_t p;
        Poly f;
        int genus;
    };
    explicit HyperellipticCurve(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

// --- residue-field helpers (arithmetic in GF(p)[x]/(u) = GF(p^deg u)) ---

/// Quadratic-residue character of c modulo the irreducible u: +1 residue,
/// -1 non-residue. Requires u to not divide c.
int legendre_mod(const Poly& c, const Poly& u);

/// Square root of c in GF(p)[x]/(u) when it exists (reduced mod u), found by
/// seeded Cantor-Zassenhaus splitting of z^2 - c; deterministic per input.
std::optional<Poly> sqrt_mod(const Poly& c, const Poly& u);

/// Inverse of c modulo m, gcd(c, m) = 1.
Poly inverse_mod(const Poly& c, const Poly& m);

enum class PlaceKind { infinite, ramified, split, inert };

/// A closed point of the curve. Finite places sit over a monic irreducible
/// u(x): ramified when u | f, split into the conjugate pair (u, v), (u, -v)
/// when f is a nonzero square mod u, inert (degree 2 deg u) otherwise. The
/// representation is canonical (u monic, deg v < deg u), so place equality is
/// structural.
class Place {
public:
    static Place infinite(std::uint64_t p);
    static Place ramified(const Poly& u);
    static Place split(const Poly& u, const Poly& v);
    static Place inert(const Poly& u);

    PlaceKind kind() const { return kind_; }
    bool is_infinite() const { return kind_ == PlaceKind::infinite; }
    int degree() const;
    /// Ramification index over the x-line: 2 for ramified and infinite, else 1.
    int ramification() const { return kind_ == PlaceKind::ramified || kind_ == PlaceKind::infinite ? 2 : 1; }
    const Poly& u() const { return u_; }
    const Poly& v() const { return v_; }

    /// Image under the hyperelliptic involution y -> -y; fixes everything but
    /// split places.
    Place conjugate() const;

    bool operator==(const Place& o) const = default;
    std::strong_ordering operator<=>(const Place& o) const;

    std::string to_string() const;

private:
    Place(PlaceKind k, Poly u, Poly v) : kind_(k), u_(std::move(u)), v_(std::move(v)) {}
    PlaceKind kind_;
    Poly u_;  // monic irreducible; x for the infinite place (unused)
    Poly v_;  // split only: v^2 = f mod u, deg v < deg u
};

/// The places of the curve lying over a monic irreducible u(x): one ramified,
/// one inert, or the two conjugate split places (in canonical order).
std::vector<Place> places_over(const HyperellipticCurve& c, const Poly& u);

/// All places of degree <= max_degree, each exactly once, sorted; includes
/// the infinite place. max_degree >= 1.
std::vector<Place> enumerate_places(const HyperellipticCurve& c, int max_degree);

/// Element (a(x) + b(x) y) / d(x) of the function field, kept in canonical
/// form: d monic, gcd(gcd(a, b), d) = 1. Ring operations close via y^2 = f(x).
class CurveFunction {
public:
    CurveFunction(const HyperellipticCurve& c, Poly a, Poly b, Poly d);

    static CurveFunction zero(const HyperellipticCurve& c);
    static CurveFunction one(const HyperellipticCurve& c);
    static CurveFunction x(const HyperellipticCurve& c);
    static CurveFunction y(const HyperellipticCurve& c);
    static CurveFunction from_poly(const HyperellipticCurve& c, const Poly& a);

    const HyperellipticCurve& curve() const { return curve_; }
    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    const Poly& d() const { return d_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    CurveFunction operator-() const;
    CurveFunction operator+(const CurveFunction& o) const;
    CurveFunction operator-(const CurveFunction& o) const;
    CurveFunction operator*(const CurveFunction& o) const;
    CurveFunction operator/(const CurveFunction& o) const;
    CurveFunction inverse() const;

    /// y -> -y.
    CurveFunction conjugate() const;
    /// Norm to k(x) of the numerator a + b y, i.e. a^2 - f b^2. Nonzero for
    /// nonzero functions.
    Poly numerator_norm() const;

    bool operator==(const CurveFunction& o) const;

    std::string to_string() const;

private:
    HyperellipticCurve curve_;
    Poly a_, b_, d_;
};

/// Square root of f in GF(p)[x]/(u^precision) extending the root v0 mod u;
/// u-adic Hensel lifting (u must not divide f, v0^2 = f mod u).
Poly hensel_sqrt(const HyperellipticCurve& c, const Poly& u, const Poly& v0, int precision);

/// Valuation v_P of a nonzero function at a place. Exact: split places use a
/// norm bound plus one Hensel lift to provable precision, the other kinds
/// close by parity (even vs odd orders never cancel).
int valuation(const CurveFunction& fn, const Place& P);

}  // namespace syzstab
