#pragma once
// Coefficient fields: exact rationals (GMP) and prime fields GF(p) with
// word-sized p.  Polynomial code is templated on the field context so the
// GF(p) hot path stays branch-free.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "detgb/common.hpp"

namespace detgb {

struct FieldQ {
    using Elem = mpq_class;
    static constexpr bool is_finite = false;

    bool same(const FieldQ&) const { return true; }
    std::string describe() const { return "QQ"; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long v) const { return Elem(v); }
    Elem from_ratio(const mpz_class& num, const mpz_class& den) const {
        if (den == 0) throw DomainError("rational with zero denominator");
        Elem r(num, den);
        r.canonicalize();
        return r;
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DomainError("division by zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
    std::string to_string(const Elem& a) const { return a.get_str(); }
};

struct FieldP {
    using Elem = std::uint32_t;
    static constexpr bool is_finite = true;

    std::uint32_t p = 32003;

    FieldP() = default;
    explicit FieldP(std::uint32_t prime) : p(prime) {
        if (p < 2) throw DomainError("field characteristic must be a prime >= 2");
    }

    bool same(const FieldP& o) const { return p == o.p; }
    std::string describe() const { return "GF(" + std::to_string(p) + ")"; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_long(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }
    Elem from_ratio(const mpz_class& num, const mpz_class& den) const {
        mpz_class m(p);
        mpz_class n = num % m;
        if (n < 0) n += m;
        mpz_class d = den % m;
        if (d < 0) d += m;
        if (d == 0) throw DomainError("denominator vanishes modulo p");
        return div(static_cast<Elem>(n.get_ui()), static_cast<Elem>(d.get_ui()));
    }

    bool is_zero(Elem a) const { return a == 0; }
    bool equal(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const {
        std::uint32_t s = a + b;
        if (s >= p) s -= p;
        return s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("division by zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1) throw DomainError("non-invertible element: characteristic not prime?");
        if (t < 0) t += p;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    std::string to_string(Elem a) const { return std::to_string(a); }
};

}  // namespace detgb
