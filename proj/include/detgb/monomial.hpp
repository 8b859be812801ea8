#pragma once
// Dense-exponent monomials.  All rings in this project are small (a handful of
// dozen variables at most), so a flat exponent vector beats any sparse scheme.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "detgb/common.hpp"

namespace detgb {

struct Monomial {
    std::vector<std::int32_t> e;
    std::int32_t deg = 0;  // invariant: deg == sum(e)

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : e(std::move(exps)) {
        deg = std::accumulate(e.begin(), e.end(), std::int32_t{0});
    }

    static Monomial variable(int nvars, int v, std::int32_t k = 1) {
        Monomial m(nvars);
        m.e[v] = k;
        m.deg = k;
        return m;
    }

    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const { return deg == 0; }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        r.deg += o.deg;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// this / o; caller guarantees divisibility.
    Monomial divide(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        r.deg -= o.deg;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg = std::accumulate(r.e.begin(), r.e.end(), std::int32_t{0});
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
        r.deg = std::accumulate(r.e.begin(), r.e.end(), std::int32_t{0});
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    bool squarefree() const {
        return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x <= 1; });
    }

    /// Bitmask of variables with positive exponent (rings here stay <= 64 vars).
    std::uint64_t support_mask() const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) m |= std::uint64_t{1} << i;
        return m;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) s.push_back(static_cast<int>(i));
        return s;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : e) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ULL;
        }
        return h;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// The fixed internal ordering used for canonical term storage everywhere:
/// graded reverse lexicographic with the variables in their ring enumeration.
/// Returns <0, 0, >0 like strcmp (positive means a > b).
inline int canonical_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    // grevlex: of two monomials of equal degree the one with the smaller
    // exponent on the least significant differing variable is larger
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

inline bool canonical_less(const Monomial& a, const Monomial& b) { return canonical_cmp(a, b) < 0; }
inline bool canonical_greater(const Monomial& a, const Monomial& b) { return canonical_cmp(a, b) > 0; }

}  // namespace detgb
