#include "syzstab/curve.hpp"

#include <algorithm>
#include <random>

namespace syzstab {

HyperellipticCurve HyperellipticCurve::create(std::uint64_t p, const Poly& f) {
    if (p < 3 || !is_prime(p)) throw domain_error("curve: p must be an odd prime >= 3");
    if (f.modulus() != p) throw domain_error("curve: f defined over the wrong field");
    if (f.is_zero() || !f.is_monic()) throw domain_error("curve: f must be monic");
    if (f.degree() % 2 == 0) throw domain_error("curve: deg f must be odd (one place at infinity)");
    if (f.degree() < 5) throw domain_error("curve: deg f = 2g+1 with g >= 2 requires deg f >= 5");
    if (!is_squarefree(f)) throw domain_error("curve: f must be squarefree");
    auto d = std::make_shared<Data>(Data{p, f, (f.degree() - 1) / 2});
    return HyperellipticCurve(std::move(d));
}

// --- GF(p^m) helpers ---

namespace {

// c^((q-1)/2) mod u with q = p^deg u, via (q-1)/2 = (p-1)/2 * sum p^i.
Poly half_order_power(const Poly& c, const Poly& u) {
    std::uint64_t p = u.modulus();
    int m = u.degree();
    Poly acc = Poly::constant(p, 1) % u;
    Poly t = c % u;
    for (int i = 0; i < m; ++i) {
        acc = acc * pow_mod(t, (p - 1) / 2, u) % u;
        if (i + 1 < m) t = pow_mod(t, p, u);
    }
    return acc;
}

std::uint64_t sqrt_seed(const Poly& c, const Poly& u) {
    std::uint64_t h = 0x243f6a8885a308d3ull ^ u.modulus();
    for (const Fp& x : c.coeffs()) h = h * 0x100000001b3ull ^ x.value();
    for (const Fp& x : u.coeffs()) h = h * 0x100000001b3ull ^ x.value();
    return h;
}

}  // namespace

int legendre_mod(const Poly& c, const Poly& u) {
    Poly r = c % u;
    check_internal(!r.is_zero(), "legendre_mod: u divides c");
    Poly w = half_order_power(r, u);
    if (w.is_one()) return 1;
    check_internal(w == Poly::constant(u.modulus(), u.modulus() - 1),
                   "legendre_mod: character value not +-1 (u not irreducible?)");
    return -1;
}

Poly inverse_mod(const Poly& c, const Poly& m) {
    auto [g, s, t] = extended_gcd(c % m, m);
    if (g.degree() != 0) throw domain_error("inverse_mod: element not invertible");
    return s % m;
}

std::optional<Poly> sqrt_mod(const Poly& c, const Poly& u) {
    std::uint64_t p = u.modulus();
    Poly r = c % u;
    if (r.is_zero()) return Poly(p);
    if (legendre_mod(r, u) != 1) return std::nullopt;
    if (u.degree() == 1) {
        // GF(p): exponent fits a word, use Tonelli-Shanks directly on values.
        Fp a = r.coeff(0);
        std::uint64_t q = p - 1;
        int e = 0;
        while ((q & 1) == 0) { q >>= 1; ++e; }
        // Find a non-residue.
        Fp n(2, p);
        while (n.pow((p - 1) / 2).value() == 1) n = Fp(n.value() + 1, p);
        Fp z = n.pow(q);
        Fp x = a.pow((q + 1) / 2);
        Fp b = a.pow(q);
        while (b.value() != 1) {
            Fp t = b;
            int m = 0;
            while (t.value() != 1) { t = t * t; ++m; }
            Fp zz = z;
            for (int i = 0; i < e - m - 1; ++i) zz = zz * zz;
            x = x * zz;
            z = zz * zz;
            b = b * z;
            e = m;
        }
        return Poly(p, std::vector<Fp>{x});
    }
    // Work in R = GF(q)[z]/(z^2 - c): split z^2 - c with random shifts. An
    // element alpha + beta*z is a pair of residues mod u.
    std::mt19937_64 rng(sqrt_seed(r, u));
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    auto rand_elt = [&] {
        std::vector<std::uint64_t> v(u.degree());
        for (auto& x : v) x = dist(rng);
        return Poly(p, v);
    };
    int m = u.degree();
    while (true) {
        Poly shift = rand_elt();
        // w = (z + shift)^((q-1)/2) in R, via base-p exponent decomposition.
        Poly wa = Poly::constant(p, 1) % u, wb = Poly(p);  // accumulator wa + wb z
        Poly ta = shift % u, tb = Poly::constant(p, 1) % u;
        auto mul = [&](const Poly& xa, const Poly& xb, const Poly& ya, const Poly& yb) {
            return std::pair<Poly, Poly>{(xa * ya + xb * yb * r) % u, (xa * yb + xb * ya) % u};
        };
        auto pow_small = [&](Poly xa, Poly xb, std::uint64_t e) {
            Poly aa = Poly::constant(p, 1) % u, ab = Poly(p);
            while (e) {
                if (e & 1) std::tie(aa, ab) = mul(aa, ab, xa, xb);
                std::tie(xa, xb) = mul(xa, xb, xa, xb);
                e >>= 1;
            }
            return std::pair<Poly, Poly>{aa, ab};
        };
        for (int i = 0; i < m; ++i) {
            auto [sa, sb] = pow_small(ta, tb, (p - 1) / 2);
            std::tie(wa, wb) = mul(wa, wb, sa, sb);
            if (i + 1 < m) std::tie(ta, tb) = pow_small(ta, tb, p);
        }
        // gcd(w - 1, z^2 - c) in GF(q)[z] is determined by the reduced form
        // wa - 1 + wb z: a nonzero wb yields the root -(wa-1)/wb.
        Poly num = wa - Poly::constant(p, 1);
        if (wb.is_zero()) continue;
        Poly root = (-(num * inverse_mod(wb, u))) % u;
        if ((root * root) % u == r) return root;
    }
}

// --- Place ---

Place Place::infinite(std::uint64_t p) { return Place(PlaceKind::infinite, Poly(p), Poly(p)); }

Place Place::ramified(const Poly& u) {
    check_internal(u.is_monic(), "place: u must be monic");
    return Place(PlaceKind::ramified, u, Poly(u.modulus()));
}

Place Place::split(const Poly& u, const Poly& v) {
    check_internal(u.is_monic(), "place: u must be monic");
    Poly vr = v % u;
    check_internal(!vr.is_zero(), "place: split v must be nonzero mod u");
    return Place(PlaceKind::split, u, vr);
}

Place Place::inert(const Poly& u) {
    check_internal(u.is_monic(), "place: u must be monic");
    return Place(PlaceKind::inert, u, Poly(u.modulus()));
}

int Place::degree() const {
    switch (kind_) {
        case PlaceKind::infinite: return 1;
        case PlaceKind::inert: return 2 * u_.degree();
        default: return u_.degree();
    }
}

Place Place::conjugate() const {
    if (kind_ != PlaceKind::split) return *this;
    return Place(PlaceKind::split, u_, (-v_) % u_);
}

std::strong_ordering Place::operator<=>(const Place& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    if (auto c = static_cast<int>(kind_) <=> static_cast<int>(o.kind_); c != 0) return c;
    if (auto c = u_ <=> o.u_; c != 0) return c;
    return v_ <=> o.v_;
}

std::string Place::to_string() const {
    switch (kind_) {
        case PlaceKind::infinite: return "inf";
        case PlaceKind::ramified: return "ram(" + u_.to_string() + ")";
        case PlaceKind::inert: return "inert(" + u_.to_string() + ")";
        default: return "split(" + u_.to_string() + "," + v_.to_string() + ")";
    }
}

std::vector<Place> places_over(const HyperellipticCurve& c, const Poly& u) {
    check_internal(u.is_monic() && u.degree() >= 1, "places_over: u must be monic of degree >= 1");
    Poly fu = c.f() % u;
    if (fu.is_zero()) return {Place::ramified(u)};
    auto v = sqrt_mod(fu, u);
    if (!v) return {Place::inert(u)};
    Place p1 = Place::split(u, *v);
    Place p2 = p1.conjugate();
    if (p2 < p1) std::swap(p1, p2);
    return {p1, p2};
}

std::vector<Place> enumerate_places(const HyperellipticCurve& c, int max_degree) {
    if (max_degree < 1) throw domain_error("enumerate_places: max_degree >= 1 required");
    std::vector<Place> out;
    out.push_back(Place::infinite(c.p()));
    for (int d = 1; d <= max_degree; ++d) {
        for (const Poly& u : monic_irreducibles(c.p(), d)) {
            for (Place& pl : places_over(c, u)) {
                if (pl.degree() <= max_degree) out.push_back(std::move(pl));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- CurveFunction ---

CurveFunction::CurveFunction(const HyperellipticCurve& c, Poly a, Poly b, Poly d)
    : curve_(c), a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_.is_zero()) throw domain_error("function: zero denominator");
    if (a_.is_zero() && b_.is_zero()) {
        d_ = Poly::constant(curve_.p(), 1);
        return;
    }
    Poly g = gcd(gcd(a_, b_), d_);
    if (g.degree() > 0) {
        a_ = a_ / g;
        b_ = b_ / g;
        d_ = d_ / g;
    }
    Fp lead = d_.leading();
    if (lead.value() != 1) {
        Fp inv = lead.inverse();
        a_ = a_ * inv;
        b_ = b_ * inv;
        d_ = d_ * inv;
    }
}

CurveFunction CurveFunction::zero(const HyperellipticCurve& c) {
    return CurveFunction(c, Poly(c.p()), Poly(c.p()), Poly::constant(c.p(), 1));
}
CurveFunction CurveFunction::one(const HyperellipticCurve& c) {
    return from_poly(c, Poly::constant(c.p(), 1));
}
CurveFunction CurveFunction::x(const HyperellipticCurve& c) { return from_poly(c, Poly::x(c.p())); }
CurveFunction CurveFunction::y(const HyperellipticCurve& c) {
    return CurveFunction(c, Poly(c.p()), Poly::constant(c.p(), 1), Poly::constant(c.p(), 1));
}
CurveFunction CurveFunction::from_poly(const HyperellipticCurve& c, const Poly& a) {
    return CurveFunction(c, a, Poly(c.p()), Poly::constant(c.p(), 1));
}

CurveFunction CurveFunction::operator-() const { return CurveFunction(curve_, -a_, -b_, d_); }

CurveFunction CurveFunction::operator+(const CurveFunction& o) const {
    return CurveFunction(curve_, a_ * o.d_ + o.a_ * d_, b_ * o.d_ + o.b_ * d_, d_ * o.d_);
}

CurveFunction CurveFunction::operator-(const CurveFunction& o) const { return *this + (-o); }

CurveFunction CurveFunction::operator*(const CurveFunction& o) const {
    // (a1 + b1 y)(a2 + b2 y) = a1 a2 + b1 b2 f + (a1 b2 + a2 b1) y
    return CurveFunction(curve_, a_ * o.a_ + b_ * o.b_ * curve_.f(), a_ * o.b_ + o.a_ * b_,
                         d_ * o.d_);
}

CurveFunction CurveFunction::inverse() const {
    if (is_zero()) throw domain_error("function: inverse of zero");
    // 1/((a + b y)/d) = d (a - b y) / (a^2 - f b^2)
    return CurveFunction(curve_, d_ * a_, -(d_ * b_), numerator_norm());
}

CurveFunction CurveFunction::operator/(const CurveFunction& o) const { return *this * o.inverse(); }

CurveFunction CurveFunction::conjugate() const { return CurveFunction(curve_, a_, -b_, d_); }

Poly CurveFunction::numerator_norm() const { return a_ * a_ - b_ * b_ * curve_.f(); }

bool CurveFunction::operator==(const CurveFunction& o) const {
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
}

std::string CurveFunction::to_string() const {
    std::string num;
    if (b_.is_zero()) {
        num = a_.to_string();
    } else {
        num = "(" + a_.to_string() + ")+(" + b_.to_string() + ")*y";
    }
    if (d_.is_one()) return num;
    return "(" + num + ")/(" + d_.to_string() + ")";
}

// --- valuations ---

Poly hensel_sqrt(const HyperellipticCurve& c, const Poly& u, const Poly& v0, int precision) {
    check_internal(precision >= 1, "hensel_sqrt: precision >= 1");
    check_internal(!(c.f() % u).is_zero(), "hensel_sqrt: u ramifies");
    std::uint64_t p = c.p();
    Poly v = v0 % u;
    check_internal(((v * v - c.f()) % u).is_zero(), "hensel_sqrt: v0 is not a root mod u");
    int k = 1;
    while (k < precision) {
        k = std::min(2 * k, precision);
        Poly mod = u.pow(k);
        // Newton step: v <- (v^2 + f) / (2v) mod u^k
        Poly two_v = v * Fp(2, p);
        Poly inv = inverse_mod(two_v % mod, mod);
        v = ((v * v + c.f()) % mod) * inv % mod;
    }
    check_internal(((v * v - c.f()) % u.pow(precision)).is_zero(), "hensel_sqrt: lift failed");
    return v;
}

int valuation(const CurveFunction& fn, const Place& P) {
    if (fn.is_zero()) throw domain_error("valuation: zero function");
    const Poly& a = fn.a();
    const Poly& b = fn.b();
    const Poly& d = fn.d();
    const HyperellipticCurve& c = fn.curve();
    int two_g_plus_1 = 2 * c.genus() + 1;

    if (P.is_infinite()) {
        // v(x) = -2, v(y) = -(2g+1); numerator orders have opposite parity,
        // so the min is always exact.
        int v_num;
        if (b.is_zero()) v_num = -2 * a.degree();
        else if (a.is_zero()) v_num = -2 * b.degree() - two_g_plus_1;
        else v_num = std::min(-2 * a.degree(), -2 * b.degree() - two_g_plus_1);
        return v_num + 2 * d.degree();
    }

    const Poly& u = P.u();
    int du = d.is_zero() ? 0 : order_at(d, u);
    switch (P.kind()) {
        case PlaceKind::ramified: {
            // y uniformizes: v(y) = 1, v(u) = 2; parities differ, min exact.
            int v_num;
            if (b.is_zero()) v_num = 2 * order_at(a, u);
            else if (a.is_zero()) v_num = 2 * order_at(b, u) + 1;
            else v_num = std::min(2 * order_at(a, u), 2 * order_at(b, u) + 1);
            return v_num - 2 * du;
        }
        case PlaceKind::inert: {
            // Unramified with the conjugation fixing P: v = ord_u(norm)/2.
            int n = order_at(fn.numerator_norm(), u);
            check_internal(n % 2 == 0, "valuation: odd norm order at inert place");
            return n / 2 - du;
        }
        case PlaceKind::split: {
            if (b.is_zero()) return order_at(a, u) - du;
            if (a.is_zero()) return order_at(b, u) - du;  // y is a unit here
            // v_P(a + b y) <= ord_u(norm) because the conjugate valuation is
            // >= 0 on polynomials; one lift to that bound plus one is exact.
            int bound = order_at(fn.numerator_norm(), u);
            Poly w = hensel_sqrt(c, u, P.v(), bound + 1);
            Poly r = (a + b * w) % u.pow(bound + 1);
            check_internal(!r.is_zero(), "valuation: split order exceeded its norm bound");
            return order_at(r, u) - du;
        }
        default:
            throw internal_error("valuation: unreachable place kind");
    }
}

}  // namespace syzstab
