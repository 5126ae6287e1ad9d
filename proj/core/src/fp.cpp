#include "syzstab/fp.hpp"

namespace syzstab {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These witnesses decide primality for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Fp Fp::from_int(std::int64_t value, std::uint64_t p) {
    std::int64_t m = value % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(m), p);
}

Fp Fp::operator+(const Fp& o) const {
    check_internal(p_ == o.p_, "Fp: mixed moduli");
    std::uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return Fp(s, p_);
}

Fp Fp::operator-(const Fp& o) const {
    check_internal(p_ == o.p_, "Fp: mixed moduli");
    return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
}

Fp Fp::operator*(const Fp& o) const {
    check_internal(p_ == o.p_, "Fp: mixed moduli");
    return Fp(mulmod(v_, o.v_, p_), p_);
}

Fp Fp::operator/(const Fp& o) const { return *this * o.inverse(); }

Fp Fp::inverse() const {
    if (v_ == 0) throw domain_error("Fp: inverse of zero");
    // p prime, so a^(p-2) = a^-1.
    return Fp(powmod(v_, p_ - 2, p_), p_);
}

Fp Fp::pow(std::uint64_t e) const { return Fp(powmod(v_, e, p_), p_); }

}  // namespace syzstab
