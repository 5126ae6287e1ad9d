#include "syzstab/divisor.hpp"

#include <set>

namespace syzstab {

Divisor Divisor::of_place(const Place& P, std::int64_t mult) {
    Divisor d;
    d.add(P, mult);
    return d;
}

std::int64_t Divisor::coefficient(const Place& P) const {
    auto it = coeffs_.find(P);
    return it == coeffs_.end() ? 0 : it->second;
}

void Divisor::add(const Place& P, std::int64_t mult) {
    if (mult == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(P, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) coeffs_.erase(it);
    }
}

std::int64_t Divisor::degree() const {
    std::int64_t d = 0;
    for (const auto& [pl, m] : coeffs_) d += m * pl.degree();
    return d;
}

bool Divisor::is_effective() const {
    for (const auto& [pl, m] : coeffs_)
        if (m < 0) return false;
    return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r(*this);
    for (const auto& [pl, m] : o.coeffs_) r.add(pl, m);
    return r;
}

Divisor Divisor::operator-() const {
    Divisor r;
    for (const auto& [pl, m] : coeffs_) r.add(pl, -m);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::operator*(std::int64_t k) const {
    Divisor r;
    if (k == 0) return r;
    for (const auto& [pl, m] : coeffs_) r.add(pl, m * k);
    return r;
}

Divisor Divisor::min(const Divisor& a, const Divisor& b) {
    Divisor r;
    std::set<Place> places;
    for (const auto& [pl, m] : a.coeffs_) places.insert(pl);
    for (const auto& [pl, m] : b.coeffs_) places.insert(pl);
    for (const Place& pl : places)
        r.add(pl, std::min(a.coefficient(pl), b.coefficient(pl)));
    return r;
}

std::string Divisor::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [pl, m] : coeffs_) {
        if (!out.empty()) out += "+";
        out += "[" + pl.to_string() + "," + std::to_string(m) + "]";
    }
    return out;
}

Divisor divisor_of(const CurveFunction& fn) {
    if (fn.is_zero()) throw domain_error("divisor_of: zero function");
    const HyperellipticCurve& c = fn.curve();
    Divisor div;
    // Finite zeros and poles live over irreducible factors of the numerator
    // norm and of the denominator.
    std::set<Poly> candidates;
    for (const auto& [u, m] : factor(fn.numerator_norm())) candidates.insert(u);
    if (fn.d().degree() > 0)
        for (const auto& [u, m] : factor(fn.d())) candidates.insert(u);
    for (const Poly& u : candidates) {
        for (const Place& pl : places_over(c, u)) {
            int v = valuation(fn, pl);
            if (v != 0) div.add(pl, v);
        }
    }
    int v_inf = valuation(fn, Place::infinite(c.p()));
    if (v_inf != 0) div.add(Place::infinite(c.p()), v_inf);
    check_internal(div.degree() == 0, "divisor_of: principal divisor of nonzero degree");
    return div;
}

}  // namespace syzstab
