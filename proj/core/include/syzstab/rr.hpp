#pragma once

#include "syzstab/divisor.hpp"
#include "syzstab/matrix.hpp"

namespace syzstab {

/// Explicit basis of the Riemann-Roch space L(D) = {fn : div(fn) + D >= 0}.
/// Functions are held over a common cleared denominator, so membership
/// coordinates can be read off exactly; the public basis is canonicalized.
class RRSpace {
public:
    const HyperellipticCurve& curve() const { return curve_; }
    const Divisor& divisor() const { return divisor_; }
    int dim() const { return static_cast<int>(kernel_.size()); }
    const std::vector<CurveFunction>& basis() const { return basis_; }

    /// Coordinates of a member of L(D) in this basis; a non-member means a
    /// broken caller and raises internal_error.
    std::vector<Fp> coordinates(const CurveFunction& fn) const;

    const Poly& denominator() const { return denom_; }

private:
    friend RRSpace rr_space(const HyperellipticCurve& c, const Divisor& D);
    HyperellipticCurve curve_;
    Divisor divisor_;
    Poly denom_;
    int max_deg_a_, max_deg_b_;
    std::vector<std::vector<Fp>> kernel_;     // monomial coordinates, RREF form
    std::vector<std::size_t> free_cols_;      // one per kernel vector
    std::vector<CurveFunction> basis_;

    RRSpace(HyperellipticCurve c, Divisor D, Poly denom, int da, int db)
        : curve_(std::move(c)), divisor_(std::move(D)), denom_(std::move(denom)),
          max_deg_a_(da), max_deg_b_(db) {}
};

/// Compute L(D) for an arbitrary divisor (not necessarily effective).
/// Deterministic: fixed monomial order and first-nonzero pivoting.
RRSpace rr_space(const HyperellipticCurve& c, const Divisor& D);

/// K = (2g-2) * infinity on the odd model.
Divisor canonical_divisor(const HyperellipticCurve& c);

int h0(const HyperellipticCurve& c, const Divisor& D);
/// h1 via Serre duality: h0(K - D).
int h1(const HyperellipticCurve& c, const Divisor& D);

/// Pointwise minimum of div(fn) + D over the basis of L(D); effective.
/// Requires h0(D) >= 1.
Divisor base_locus(const HyperellipticCurve& c, const Divisor& D);
bool is_globally_generated(const HyperellipticCurve& c, const Divisor& D);

/// Linear equivalence: equal degrees and h0(D1 - D2) >= 1.
bool class_equal(const HyperellipticCurve& c, const Divisor& D1, const Divisor& D2);

/// deg D - 2 (h0(D) - 1).
std::int64_t clifford_of_divisor(const HyperellipticCurve& c, const Divisor& D);

struct CurveClifford {
    std::int64_t value;
    Divisor attained_at;
};

/// Minimum Clifford index over effective divisors of total degree up to the
/// bound with h0 >= 2 and h1 >= 2 (brute force, a verification tool rather
/// than a scalable algorithm). At genus 2 no divisor satisfies both
/// conditions, so the search falls back to h1 >= 1 there, where the canonical
/// class attains the classical value gonality - 2 = 0.
CurveClifford clifford_of_curve(const HyperellipticCurve& c, int search_degree_bound);

}  // namespace syzstab
