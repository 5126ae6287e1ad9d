#include "syzstab/poly.hpp"

#include <algorithm>
#include <random>

namespace syzstab {

Poly::Poly(std::uint64_t p, const std::vector<std::uint64_t>& coeffs) : p_(p) {
    c_.reserve(coeffs.size());
    for (std::uint64_t c : coeffs) c_.emplace_back(c, p);
    normalize();
}

Poly::Poly(std::uint64_t p, std::vector<Fp> coeffs) : p_(p), c_(std::move(coeffs)) {
    normalize();
}

Poly Poly::monomial(std::uint64_t p, int degree, std::uint64_t coeff) {
    std::vector<std::uint64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return Poly(p, c);
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fp Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Fp(0, p_);
    return c_[i];
}

Fp Poly::leading() const {
    check_internal(!is_zero(), "Poly: leading coefficient of zero");
    return c_.back();
}

std::vector<std::uint64_t> Poly::coeff_values() const {
    std::vector<std::uint64_t> out;
    out.reserve(c_.size());
    for (const Fp& c : c_) out.push_back(c.value());
    return out;
}

Poly Poly::operator-() const {
    std::vector<Fp> c(c_);
    for (Fp& x : c) x = -x;
    return Poly(p_, std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Fp> c(std::max(c_.size(), o.c_.size()), Fp(0, p_));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Poly(p_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(p_);
    std::vector<Fp> c(c_.size() + o.c_.size() - 1, Fp(0, p_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(p_, std::move(c));
}

Poly Poly::operator*(const Fp& s) const {
    std::vector<Fp> c(c_);
    for (Fp& x : c) x *= s;
    return Poly(p_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw domain_error("Poly: division by zero polynomial");
    Poly r(*this);
    if (degree() < divisor.degree()) return {Poly(p_), r};
    std::vector<Fp> q(degree() - divisor.degree() + 1, Fp(0, p_));
    Fp lead_inv = divisor.leading().inverse();
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        int k = r.degree() - divisor.degree();
        Fp c = r.leading() * lead_inv;
        q[k] = c;
        r -= divisor.shift(k) * c;
    }
    return {Poly(p_, std::move(q)), r};
}

bool Poly::divides(const Poly& multiple) const {
    return multiple.divmod(*this).second.is_zero();
}

Poly Poly::monic() const {
    check_internal(!is_zero(), "Poly: monic of zero");
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly(p_);
    std::vector<Fp> c(c_.size() - 1, Fp(0, p_));
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Fp(i % p_, p_);
    return Poly(p_, std::move(c));
}

Poly Poly::shift(int k) const {
    if (is_zero()) return *this;
    std::vector<Fp> c(c_.size() + k, Fp(0, p_));
    std::copy(c_.begin(), c_.end(), c.begin() + k);
    return Poly(p_, std::move(c));
}

Fp Poly::eval(const Fp& at) const {
    Fp acc(0, p_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::pow(int e) const {
    Poly acc = Poly::constant(p_, 1);
    Poly base(*this);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    // Same degree: compare coefficients from the top down.
    for (int i = degree(); i >= 0; --i)
        if (auto c = coeff(i).value() <=> o.coeff(i).value(); c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Fp c = coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c.value() != 1) out += std::to_string(c.value());
        if (i > 0) {
            if (c.value() != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x(a), y(b);
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
    std::uint64_t p = a.modulus();
    Poly r0(a), r1(b);
    Poly s0 = Poly::constant(p, 1), s1(p);
    Poly t0(p), t1 = Poly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1; r1 = r;
        Poly s = s0 - q * s1; s0 = s1; s1 = s;
        Poly t = t0 - q * t1; t0 = t1; t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Fp inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly acc = Poly::constant(base.modulus(), 1) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) acc = acc * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return acc;
}

int order_at(const Poly& poly, const Poly& u) {
    check_internal(!poly.is_zero(), "order_at: zero polynomial");
    int n = 0;
    Poly r(poly);
    while (true) {
        auto [q, rem] = r.divmod(u);
        if (!rem.is_zero()) return n;
        r = q;
        ++n;
    }
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).degree() == 0;
}

namespace {

// x^(p^i) mod m for i = 0..count-1.
std::vector<Poly> frobenius_powers(const Poly& m, int count) {
    std::uint64_t p = m.modulus();
    std::vector<Poly> out;
    out.reserve(count);
    Poly xp = Poly::x(p) % m;
    for (int i = 0; i < count; ++i) {
        out.push_back(xp);
        if (i + 1 < count) xp = pow_mod(xp, p, m);
    }
    return out;
}

// Distinct-degree decomposition of a monic squarefree polynomial:
// list of (product of irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
    std::uint64_t p = f.modulus();
    std::vector<std::pair<Poly, int>> out;
    Poly rest(f);
    Poly h = Poly::x(p) % rest;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        h = pow_mod(h, p, rest);
        Poly g = gcd(h - Poly::x(p), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = (rest / g).monic();
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

std::uint64_t poly_seed(const Poly& f) {
    // splitmix-style fold so equal-degree splitting is reproducible per input.
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ f.modulus();
    for (const Fp& c : f.coeffs()) {
        h ^= c.value() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Poly random_poly_below(int degree_bound, std::uint64_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<std::uint64_t> c(degree_bound);
    for (auto& x : c) x = dist(rng);
    return Poly(p, c);
}

// (q^d - 1)/2 power of w modulo m, where q = p^deg(m) would overflow; uses
// (p^n - 1)/2 = (p-1)/2 * (1 + p + ... + p^(n-1)) so only p-sized exponents
// appear.
Poly pow_half_group_order(const Poly& w, int n, const Poly& m) {
    std::uint64_t p = m.modulus();
    Poly acc = Poly::constant(p, 1) % m;
    Poly t = w % m;
    for (int i = 0; i < n; ++i) {
        acc = acc * pow_mod(t, (p - 1) / 2, m) % m;
        if (i + 1 < n) t = pow_mod(t, p, m);
    }
    return acc;
}

// Cantor-Zassenhaus split of a monic squarefree product of irreducibles of
// equal degree d.
void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    std::uint64_t p = f.modulus();
    while (true) {
        Poly r = random_poly_below(f.degree(), p, rng);
        if (r.degree() < 1) continue;
        Poly w = pow_half_group_order(r, d, f);
        Poly g = gcd(w - Poly::constant(p, 1), f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree((f / g).monic(), d, rng, out);
            return;
        }
    }
}

// Squarefree decomposition in characteristic p (Yun, with p-th root descent).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    std::uint64_t p = f.modulus();
    std::vector<std::pair<Poly, int>> out;
    Poly fd = f.derivative();
    if (fd.is_zero()) {
        // f = g(x^p); over GF(p) a p-th root just contracts exponents.
        std::vector<Fp> c;
        for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
        for (auto& [g, m] : squarefree_decomposition(Poly(p, std::move(c)).monic()))
            out.emplace_back(g, m * static_cast<int>(p));
        return out;
    }
    Poly c = gcd(f, fd);
    Poly w = (f / c).monic();
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = (w / y).monic();
        if (z.degree() > 0) out.emplace_back(z, i);
        c = (c / y).monic();
        w = y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_decomposition(c))
            out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (!is_squarefree(f)) return false;
    // Irreducible of degree n iff x^(p^n) == x mod f and no factor of degree
    // n/l for prime l | n; the distinct-degree scan settles both.
    auto dd = distinct_degree(f.monic());
    return dd.size() == 1 && dd[0].second == f.degree();
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
    if (f.is_zero()) throw domain_error("factor: zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() < 1) return out;
    std::mt19937_64 rng(poly_seed(f));
    for (const auto& [sq, mult] : squarefree_decomposition(f.monic())) {
        for (const auto& [prod, d] : distinct_degree(sq)) {
            std::vector<Poly> irr;
            equal_degree(prod, d, rng, irr);
            for (Poly& g : irr) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Poly> monic_irreducibles(std::uint64_t p, int degree) {
    check_internal(degree >= 1, "monic_irreducibles: degree >= 1");
    std::vector<Poly> out;
    if (degree == 1) {
        for (std::uint64_t c = 0; c < p; ++c) out.push_back(Poly(p, {c, 1}));
        return out;
    }
    auto smaller = [&] {
        std::vector<Poly> s;
        for (int d = 1; d <= degree / 2; ++d) {
            auto v = monic_irreducibles(p, d);
            s.insert(s.end(), v.begin(), v.end());
        }
        return s;
    }();
    // Enumerate all monic polynomials of the given degree by counting in base p.
    std::vector<std::uint64_t> digits(degree, 0);
    while (true) {
        std::vector<std::uint64_t> coeffs(digits);
        coeffs.push_back(1);
        Poly cand(p, coeffs);
        bool irreducible = true;
        for (const Poly& u : smaller) {
            if (u.divides(cand)) { irreducible = false; break; }
        }
        if (irreducible) out.push_back(cand);
        int i = 0;
        for (; i < degree; ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == degree) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace syzstab
